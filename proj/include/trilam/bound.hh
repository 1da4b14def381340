////////////////////////////////////////////////////////////////////////////////
// bound.hh
////////////////////////////////////////////////////////////////////////////////
// Closed-form evaluation of the translation lower bound U_tr on the stress
// energy of a two-material-plus-void plane composite, the optimal translation
// parameter alpha*, the optimal per-phase average stresses, and the coupled
// effective-moduli bounds (K*, L*). The bound is exact (attained) in the
// high-porosity regions; in region E no closed form exists and the value is
// produced by the independent numeric oracle and flagged as conjectural.
//
// Normalization: the applied stress is tau0 = e1 x e1 + rho e2 x e2 and every
// energy is the quadrupled density integrated over the unit cell, so
//     U_tr = K* S0^2 + L* D0^2 = (K*(1+rho)^2 + L*(1-rho)^2) / 2
// wherever the moduli are defined.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <optional>
#include <utility>

#include "trilam/regions.hh"

namespace trilam {

// Average spherical / deviatoric stress components in the two material phases.
struct PhaseAverages {
    double S1 = 0.0, D11 = 0.0, D12 = 0.0;
    double S2 = 0.0, D21 = 0.0, D22 = 0.0;
};

// Uncoupled Hashin-Shtrikman comparison values; independent of rho.
struct HSBounds {
    double K_HS;
    double L_HS;
    double alpha_K;  // = L1
    double alpha_L;  // = 2 K1 + L1
};

struct BoundResult {
    Region region;
    double U_tr;
    double alpha_star;
    std::optional<double> K_star;  // absent in region E
    std::optional<double> L_star;
    PhaseAverages averages;
    bool conjectured = false;  // true in region E: bound value only, not known exact
};

// U_tr from the named region's closed form, without classifying the spec.
// Region E falls back to the numeric oracle.
double u_tr_region(const CompositeSpec &spec, Region region);

BoundResult bound(const CompositeSpec &spec);

double alpha_star(const CompositeSpec &spec, Region region);

PhaseAverages phase_averages(const CompositeSpec &spec, Region region);

// Closed forms for (K*, L*); throws std::domain_error in region E.
std::pair<double, double> effective_moduli(const CompositeSpec &spec, Region region);

// (K*, L*) recovered from the envelope identity with a central finite
// difference of U_tr in rho. The step shrinks by factors of 10 until the
// stencil stays inside one smoothness class, down to 1e-9; below that a
// std::domain_error is thrown. Requires |rho| < 1 and region != E.
std::pair<double, double> effective_moduli_from_envelope(const CompositeSpec &spec,
                                                         Region region, double fd_step);

HSBounds hs_bounds(const Material &mat1, const Material &mat2, double m1, double m2);

}  // namespace trilam
