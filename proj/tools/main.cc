// trilam: translation-method energy bounds and optimal microstructures for
// two-material-plus-void plane composites.
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "trilam/cli.hh"

namespace {

// --mat K1,L1,K2,L2
void parse_materials(const std::vector<double> &v, trilam::RunConfig &c) {
    if (v.size() != 4) throw CLI::ValidationError("--mat expects K1,L1,K2,L2");
    c.mat1 = {v[0], v[1]};
    c.mat2 = {v[2], v[3]};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"translation bounds and optimal laminates for 2D two-material + void composites"};
    app.require_subcommand(1);

    trilam::RunConfig cfg;
    std::vector<double> mat;
    std::string grid;

    auto add_shared = [&](CLI::App *cmd) {
        cmd->add_option("--mat", mat, "materials K1,L1,K2,L2 (compliances)")->delimiter(',');
        cmd->add_option("--out", cfg.out, "output path (default: stdout)");
        cmd->add_option("--format", cfg.format, "output format: json | csv | svg");
    };

    CLI::App *bnd = app.add_subcommand("bound", "translation bound at a single point");
    add_shared(bnd);
    bnd->add_option("--m1", cfg.m1, "phase-1 volume fraction")->required();
    bnd->add_option("--m2", cfg.m2, "phase-2 volume fraction")->required();
    bnd->add_option("--rho", cfg.rho, "anisotropy of the average stress, in [-1,1]")->required();
    bnd->add_flag("--verify", cfg.verify_bound, "cross-check against the numeric oracle");
    bnd->add_option("--tol-oracle", cfg.tol_oracle, "relative tolerance for --verify");

    CLI::App *swp = app.add_subcommand("sweep", "rho sweep at fixed fractions (CSV/SVG)");
    add_shared(swp);
    swp->add_option("--m1", cfg.m1)->required();
    swp->add_option("--m2", cfg.m2)->required();
    swp->add_option("--rho-min", cfg.rho_min, "sweep start (default -1)");
    swp->add_option("--rho-max", cfg.rho_max, "sweep end (default 1)");
    swp->add_option("--rho-steps", cfg.rho_steps, "number of rho samples (default 201)");

    CLI::App *map = app.add_subcommand("region-map", "region raster over (rho, m1) at fixed m2");
    add_shared(map);
    map->add_option("--m2-plane", cfg.m2_plane, "fixed m2 of the cross-section")->required();
    map->add_option("--grid", grid, "resolution NxM (default 200x200)");

    CLI::App *lam = app.add_subcommand("laminate", "optimal microstructure (JSON/SVG)");
    add_shared(lam);
    lam->add_option("--m1", cfg.m1)->required();
    lam->add_option("--m2", cfg.m2)->required();
    lam->add_option("--rho", cfg.rho)->required();
    lam->add_flag("--sg", cfg.sg, "emit the Sigmund-Gibiansky cell (region B)");

    CLI::App *ver = app.add_subcommand("verify", "seeded cross-verification report");
    add_shared(ver);
    ver->add_option("--samples", cfg.samples, "total number of sampled specs (default 100)");
    ver->add_option("--seed", cfg.seed, "rng seed (default 7)");
    ver->add_option("--regions", cfg.regions, "region filter, e.g. --regions A1 B C")
        ->delimiter(',');
    ver->add_option("--tol-oracle", cfg.tol_oracle, "oracle deviation tolerance (default 1e-5)");
    ver->add_option("--tol-attain", cfg.tol_attain, "attainment gap tolerance (default 1e-9)");
    ver->add_option("--tol-resid", cfg.tol_resid, "jump residual tolerance (default 1e-12)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!mat.empty()) parse_materials(mat, cfg);
        if (!grid.empty()) {
            const auto x = grid.find('x');
            if (x == std::string::npos) throw CLI::ValidationError("--grid expects NxM");
            cfg.grid_nx = std::stoi(grid.substr(0, x));
            cfg.grid_ny = std::stoi(grid.substr(x + 1));
        }
    } catch (const std::exception &e) {
        std::cerr << "trilam: " << e.what() << "\n";
        return 2;
    }

    if (bnd->parsed()) return trilam::cmd_bound(cfg, std::cerr);
    if (swp->parsed()) return trilam::cmd_sweep(cfg, std::cerr);
    if (map->parsed()) return trilam::cmd_region_map(cfg, std::cerr);
    if (lam->parsed()) return trilam::cmd_laminate(cfg, std::cerr);
    if (ver->parsed()) return trilam::cmd_verify(cfg, std::cerr);
    return 2;
}
