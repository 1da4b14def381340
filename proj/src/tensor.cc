#include "trilam/tensor.hh"

#include <cmath>

namespace trilam {

SymTensor2 from_cartesian(double t11, double t22, double t12) {
    return {(t11 + t22) / kSqrt2, (t11 - t22) / kSqrt2, kSqrt2 * t12};
}

std::array<double, 3> to_cartesian(const SymTensor2 &t) {
    return {(t.s + t.d1) / kSqrt2, (t.s - t.d1) / kSqrt2, t.d2 / kSqrt2};
}

double det(const SymTensor2 &t) {
    return 0.5 * (t.s * t.s - t.d1 * t.d1 - t.d2 * t.d2);
}

double energy_density(const Material &m, const SymTensor2 &t) {
    return m.K * t.s * t.s + m.L * (t.d1 * t.d1 + t.d2 * t.d2);
}

double translated_density(const Material &m, const SymTensor2 &t, double alpha) {
    return (m.K + alpha) * t.s * t.s + (m.L - alpha) * (t.d1 * t.d1 + t.d2 * t.d2);
}

Loading::Loading(double rho_) : rho(rho_) {
    if (!std::isfinite(rho) || rho < -1.0 || rho > 1.0)
        throw SpecError("loading anisotropy rho must lie in [-1, 1], got " + std::to_string(rho_));
}

namespace {

void check_material(const Material &m, const char *name) {
    if (!std::isfinite(m.K) || !std::isfinite(m.L) || m.K <= 0.0 || m.L <= 0.0)
        throw SpecError(std::string(name) + ": compliances K, L must be positive and finite");
}

}  // namespace

CompositeSpec::CompositeSpec(Material mat1_, Material mat2_, double m1_, double m2_, Loading loading_)
    : mat1(mat1_), mat2(mat2_), m1(m1_), m2(m2_), loading(loading_) {
    check_material(mat1, "mat1");
    check_material(mat2, "mat2");
    if (!(mat1.K < mat2.K && mat1.L < mat2.L))
        throw SpecError("materials must be well-ordered: K1 < K2 and L1 < L2");
    if (!std::isfinite(m1) || !std::isfinite(m2) || m1 <= 0.0 || m2 <= 0.0)
        throw SpecError("volume fractions m1, m2 must be strictly positive");
    if (m1 + m2 >= 1.0)
        throw SpecError("fractions exceed 1: m1 + m2 must stay strictly below 1 (void fraction > 0)");
}

}  // namespace trilam
