////////////////////////////////////////////////////////////////////////////////
// oracle.hh
////////////////////////////////////////////////////////////////////////////////
// Independent numeric re-derivation of the translation bound. The inner
// problem minimizes the convexified translated energy over relaxed average
// fields (three linear average constraints plus the two per-phase sign-cone
// constraints) for fixed translation alpha; the outer problem maximizes
// Phi(rho, alpha) - 2 rho alpha over a finite alpha window. None of the
// closed-form region formulas enter anywhere here.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <array>
#include <vector>

#include "trilam/bound.hh"

namespace trilam {

enum class Regime {
    Convex,               // alpha in (-K, L): all terms convex
    SphericalDominated,   // alpha >= L: only the spherical term survives; needs rho >= 0
    DeviatoricDominated,  // alpha <= -K: only the deviatoric terms survive; needs rho <= 0
    Infeasible,           // regime requires the opposite sign of rho
};

// Regime of the translated integrand for one material. Endpoint values
// alpha == L and alpha == -K map to the endpoint regimes.
Regime regime_of(const Material &m, double alpha, double rho);

struct InnerResult {
    bool feasible = false;  // false is the -inf marker (wrong-sign regime)
    double phi = 0.0;       // min Phi1 + Phi2 over the relaxed average set
    PhaseAverages averages;
};

InnerResult phi_inner(const CompositeSpec &spec, double alpha);
// start override (S1, D11, D12); used by the convexity restart test
InnerResult phi_inner(const CompositeSpec &spec, double alpha, const std::array<double, 3> &start);

struct OracleResult {
    double U = 0.0;
    double alpha_star = 0.0;
    PhaseAverages fields;
    // feasible (alpha, Phi - 2 rho alpha) scan samples, final point included
    std::vector<std::pair<double, double>> trace;
};

// Scan alpha over [-K2, L2] (grid of >= 400 points plus the breakpoints
// -K2, -K1, 0, L1, L2), then refine the best bracket by golden section to
// 1e-8 in alpha.
OracleResult translation_max(const CompositeSpec &spec);

}  // namespace trilam
