////////////////////////////////////////////////////////////////////////////////
// regions.hh
////////////////////////////////////////////////////////////////////////////////
// Optimality-region atlas over the parameter polyhedron
//     Pi = { (rho, m1, m2) : rho in [-1,1], m1 in (0, 1-m2), m2 in (0,1) }.
// Explicit boundary curves psi(kind)(m2, rho) give the m1-value of a region
// interface; the D-E and D'-E interfaces are level sets of a signed residual.
// Tie-breaking on boundaries is deterministic with priority
//     A > C > B > D > E   (and the primed analogues);
// at rho = 0 exactly the unprimed atlas wins.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <utility>
#include <vector>

#include "trilam/tensor.hh"

namespace trilam {

enum class Region { A1, A2, B, C, D, E, A1p, A2p, Bp, Cp, Dp };

const char *to_string(Region r);
bool is_primed(Region r);
// K*, L* closed forms exist everywhere except region E
inline bool has_moduli(Region r) { return r != Region::E; }
// regions with a known attaining laminate
bool is_attainable(Region r);

enum class Boundary {
    AB, BD, AC, CE,          // rho >= 0 atlas
    ApBp, BpDp, ApCp, CpE,   // rho <= 0 atlas
    DE, DpE,                 // implicit interfaces
    A1A2, A1pA2p,            // subregion split inside A / A'
};

const char *to_string(Boundary b);

// m1-value of an explicit boundary at anisotropy rho. Throws std::domain_error
// when rho is outside the branch domain or for the implicit kinds DE / DpE.
double psi(Boundary kind, const Material &mat1, const Material &mat2, double m2, double rho);

// Signed residual whose zero set is the implicit boundary (kinds DE / DpE only).
// Region D is the set residual >= 0 past the B-D curve; region D' the set
// residual <= 0 past the B'-D' curve.
double psi_residual(Boundary kind, const Material &mat1, const Material &mat2,
                    double m1, double m2, double rho);

struct Classification {
    Region region;
    // min |m1 - boundary m1| over the interfaces active at this rho; lets
    // callers detect near-degenerate classification
    double boundary_margin;
};

Classification classify(const CompositeSpec &spec);
Region classify_region(const CompositeSpec &spec);

// count >= 2 points (rho_k, m1_k) on the boundary; the boundary equation is
// satisfied to 1e-12 (implicit kinds are root-found in m1 by bisection).
// Throws std::runtime_error if an implicit boundary does not intersect the
// scanned strip.
std::vector<std::pair<double, double>> boundary_samples(
    Boundary kind, const Material &mat1, const Material &mat2, double m2, int count);

}  // namespace trilam
