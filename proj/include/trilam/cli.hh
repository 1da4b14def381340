////////////////////////////////////////////////////////////////////////////////
// cli.hh
////////////////////////////////////////////////////////////////////////////////
// Command implementations behind the trilam executable. Each command takes a
// validated-on-entry RunConfig, writes its payload to config.out (or stdout)
// and returns a process exit code:
//     0  success
//     1  verification failed (bound --verify, verify)
//     2  invalid spec or config
//     3  no attaining structure in the requested region
//     4  I/O failure
// CSV payloads serialize numbers with 9 significant digits and LF line
// endings, so a fixed config and seed reproduce files bitwise.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trilam/tensor.hh"

namespace trilam {

struct RunConfig {
    Material mat1{1.0, 2.0};
    Material mat2{3.0, 4.0};
    double m1 = 0.2;
    double m2 = 0.35;
    double rho = 0.5;
    double rho_min = -1.0;
    double rho_max = 1.0;
    int rho_steps = 201;
    double m2_plane = 0.35;
    int grid_nx = 200;
    int grid_ny = 200;
    std::string format;  // "json" | "csv" | "svg"; commands pick their default
    std::string out;     // output path; empty writes to stdout
    std::uint64_t seed = 7;
    int samples = 100;
    std::vector<std::string> regions;  // verify filter; empty = all closed-form regions
    double tol_oracle = 1e-5;
    double tol_attain = 1e-9;
    double tol_resid = 1e-12;
    bool sg = false;
    bool verify_bound = false;  // bound --verify
};

// single-point bound report (JSON)
int cmd_bound(const RunConfig &config, std::ostream &diag);
// rho sweep at fixed fractions (CSV or SVG plot)
int cmd_sweep(const RunConfig &config, std::ostream &diag);
// (rho, m1) region map at fixed m2 (CSV or SVG raster)
int cmd_region_map(const RunConfig &config, std::ostream &diag);
// optimal microstructure (JSON tree / SG cell, or SVG sketch)
int cmd_laminate(const RunConfig &config, std::ostream &diag);
// seeded cross-verification of bounds, oracle and structures
int cmd_verify(const RunConfig &config, std::ostream &diag);

// 9-significant-digit formatting used by every CSV emitter
std::string fmt9(double v);

}  // namespace trilam
