////////////////////////////////////////////////////////////////////////////////
// tensor.hh
////////////////////////////////////////////////////////////////////////////////
// Plane symmetric stress algebra in the spherical/deviatoric basis
//     E1 = (e1 x e1 + e2 x e2)/sqrt2,
//     E2 = (e1 x e1 - e2 x e2)/sqrt2,
//     E3 = (e1 x e2 + e2 x e1)/sqrt2,
// so a symmetric tensor is tau = s E1 + d1 E2 + d2 E3 with
//     s  = (t11 + t22)/sqrt2,  d1 = (t11 - t22)/sqrt2,  d2 = sqrt2 t12.
// All internal stress values live in (s, d1, d2); Cartesian triples appear
// only at I/O boundaries.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace trilam {

inline constexpr double kSqrt2 = 1.4142135623730950488;

// Invalid problem data (bad materials, degenerate fractions, bad CLI config).
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested an attaining microstructure where none is known (regions D, D', E).
struct RegionNotAttained : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SymTensor2 {
    double s  = 0.0;  // spherical component
    double d1 = 0.0;  // first deviatoric component
    double d2 = 0.0;  // second deviatoric component

    constexpr SymTensor2() = default;
    constexpr SymTensor2(double s_, double d1_, double d2_) : s(s_), d1(d1_), d2(d2_) {}

    friend constexpr SymTensor2 operator+(const SymTensor2 &a, const SymTensor2 &b) {
        return {a.s + b.s, a.d1 + b.d1, a.d2 + b.d2};
    }
    friend constexpr SymTensor2 operator-(const SymTensor2 &a, const SymTensor2 &b) {
        return {a.s - b.s, a.d1 - b.d1, a.d2 - b.d2};
    }
    friend constexpr SymTensor2 operator*(double c, const SymTensor2 &t) {
        return {c * t.s, c * t.d1, c * t.d2};
    }
};

SymTensor2 from_cartesian(double t11, double t22, double t12);

// (t11, t22, t12)
std::array<double, 3> to_cartesian(const SymTensor2 &t);

// det tau = (s^2 - d1^2 - d2^2) / 2 = t11 t22 - t12^2
double det(const SymTensor2 &t);

// Isotropic compliance pair K = 1/kappa, L = 1/mu of a non-degenerate phase.
// Void is a structural marker elsewhere (phase id 3), never a Material value.
struct Material {
    double K;  // bulk compliance
    double L;  // shear compliance
};

// Quadrupled stress energy density  K s^2 + L (d1^2 + d2^2).
double energy_density(const Material &m, const SymTensor2 &t);

// Translated integrand  (K + a) s^2 + (L - a)(d1^2 + d2^2).
// Identity: energy_density(m, t) == translated_density(m, t, a) - 2 a det(t).
double translated_density(const Material &m, const SymTensor2 &t, double alpha);

// Normalized average stress tau0 = e1 x e1 + rho e2 x e2, rho in [-1, 1];
// the larger principal value is scaled to 1.
struct Loading {
    double rho;

    explicit Loading(double rho_);

    SymTensor2 tau0() const { return {S0(), D0(), 0.0}; }
    double S0() const { return (1.0 + rho) / kSqrt2; }
    double D0() const { return (1.0 - rho) / kSqrt2; }
};

// Two well-ordered materials (K1 < K2, L1 < L2), their volume fractions and
// the loading. m3 = 1 - m1 - m2 > 0 is the void fraction; all inequalities
// strict, degenerate fractions are rejected rather than clamped.
struct CompositeSpec {
    Material mat1;
    Material mat2;
    double m1;
    double m2;
    Loading loading;

    CompositeSpec(Material mat1_, Material mat2_, double m1_, double m2_, Loading loading_);

    double m3() const { return 1.0 - m1 - m2; }
    double rho() const { return loading.rho; }
    CompositeSpec with_rho(double rho_) const {
        return CompositeSpec{mat1, mat2, m1, m2, Loading{rho_}};
    }
    CompositeSpec with_m1(double m1_) const {
        return CompositeSpec{mat1, mat2, m1_, m2, loading};
    }
};

}  // namespace trilam
