#include "trilam/bound.hh"

#include <cmath>
#include <stdexcept>

#include "trilam/oracle.hh"

namespace trilam {

namespace {

struct Mats {
    double K1, L1, K2, L2, g11, g22;  // gii = Ki + Li
};

Mats mats(const CompositeSpec &s) {
    return {s.mat1.K, s.mat1.L, s.mat2.K, s.mat2.L, s.mat1.K + s.mat1.L, s.mat2.K + s.mat2.L};
}

// Smoothness classes of U_tr(rho) at fixed fractions: the A1/A2 and A1'/A2'
// splits share one formula, and C / C' are a single rational function of rho.
int smooth_class(Region r) {
    switch (r) {
        case Region::A1: case Region::A2: return 0;
        case Region::A1p: case Region::A2p: return 1;
        case Region::B: return 2;
        case Region::Bp: return 3;
        case Region::C: case Region::Cp: return 4;
        case Region::D: return 5;
        case Region::Dp: return 6;
        case Region::E: return 7;
    }
    return -1;
}

}  // namespace

double u_tr_region(const CompositeSpec &spec, Region region) {
    const Mats m = mats(spec);
    const double rho = spec.rho(), m1 = spec.m1, m2 = spec.m2;
    switch (region) {
        case Region::A1:
        case Region::A2: {
            const double den = m1 * m.g22 + m2 * m.g11;
            return 0.5 * (1.0 + rho) * (1.0 + rho) * m.g11 * m.g22 / den - 2.0 * rho * m.L2;
        }
        case Region::A1p:
        case Region::A2p: {
            const double den = m1 * m.g22 + m2 * m.g11;
            return 0.5 * (1.0 - rho) * (1.0 - rho) * m.g11 * m.g22 / den + 2.0 * rho * m.K2;
        }
        case Region::B: {
            const double load = 1.0 + rho - 2.0 * std::sqrt(rho * m2);
            return load * load / (2.0 * m1) * m.g11 + 2.0 * rho * m.K2;
        }
        case Region::Bp: {
            const double load = 1.0 - rho - 2.0 * std::sqrt(-rho * m2);
            return load * load / (2.0 * m1) * m.g11 - 2.0 * rho * m.L2;
        }
        case Region::C:
        case Region::Cp: {
            return m.g22 * rho * rho / (2.0 * m2) + (m.K2 - m.L2) * rho +
                   (m.g11 * (1.0 - m2) * (1.0 - m2) + m.g22 * m1 * m2) / (2.0 * m1);
        }
        case Region::D: {
            const double den = m1 * (m.K2 + m.L1) + m2 * m.g11;
            return 0.5 * (1.0 + rho) * (1.0 + rho) * m.g11 * (m.K2 + m.L1) / den -
                   2.0 * rho * m.L1;
        }
        case Region::Dp: {
            const double den = m1 * (m.K1 + m.L2) + m2 * m.g11;
            return 0.5 * (1.0 - rho) * (1.0 - rho) * m.g11 * (m.K1 + m.L2) / den +
                   2.0 * rho * m.K1;
        }
        case Region::E:
            return translation_max(spec).U;
    }
    throw std::domain_error("u_tr_region: unknown region");
}

// Stationary averages of the alpha-interior problem, the sign cones ignored;
// inside region E the cones are slack away from the rho = 0 neighbourhood.
static PhaseAverages interior_alpha_averages(const CompositeSpec &spec, double alpha) {
    const Mats m = mats(spec);
    const double S0 = spec.loading.S0(), D0 = spec.loading.D0();
    const double denK = spec.m1 * (m.K2 + alpha) + spec.m2 * (m.K1 + alpha);
    const double denL = spec.m1 * (m.L2 - alpha) + spec.m2 * (m.L1 - alpha);
    PhaseAverages a;
    a.S1 = (m.K2 + alpha) * S0 / denK;
    a.S2 = (m.K1 + alpha) * S0 / denK;
    a.D11 = (m.L2 - alpha) * D0 / denL;
    a.D21 = (m.L1 - alpha) * D0 / denL;
    return a;
}

double alpha_star(const CompositeSpec &spec, Region region) {
    const Mats m = mats(spec);
    const double rho = spec.rho(), m1 = spec.m1, m2 = spec.m2;
    switch (region) {
        case Region::A1:
        case Region::A2:
            return m.L2;
        case Region::A1p:
        case Region::A2p:
            return -m.K2;
        case Region::D:
            return m.L1;
        case Region::Dp:
            return -m.K1;
        case Region::B: {
            const double sq = std::sqrt(rho * m2);
            return 0.5 * sq * (1.0 + rho - 2.0 * sq) / (rho * m1) * m.g11 - m.K2;
        }
        case Region::Bp: {
            const double sq = std::sqrt(-rho * m2);
            return 0.5 * sq * (1.0 - rho - 2.0 * sq) / (rho * m1) * m.g11 + m.L2;
        }
        case Region::C:
            return 0.5 * ((m.L2 - m.K2) +
                          m2 / (rho * m1) * ((1.0 - m2) * m.g11 - m1 * m.g22));
        case Region::Cp:
            return 0.5 * ((m.L2 - m.K2) -
                          m2 / (rho * m1) * ((1.0 - m2) * m.g11 - m1 * m.g22));
        case Region::E:
            return translation_max(spec).alpha_star;
    }
    throw std::domain_error("alpha_star: unknown region");
}

PhaseAverages phase_averages(const CompositeSpec &spec, Region region) {
    const Mats m = mats(spec);
    const double rho = spec.rho(), m1 = spec.m1, m2 = spec.m2;
    const double S0 = spec.loading.S0(), D0 = spec.loading.D0();
    PhaseAverages a;
    switch (region) {
        case Region::A1:
        case Region::A2: {
            const double den = m1 * m.g22 + m2 * m.g11;
            a.S1 = S0 * m.g22 / den;
            a.S2 = S0 * m.g11 / den;
            // Phi is independent of the deviatoric averages here; report the
            // common B/C pattern D11 = min(D0/m1, S1), which both satisfies
            // the average constraint and stays inside the cones.
            a.D11 = std::min(D0 / m1, a.S1);
            a.D21 = (D0 - m1 * a.D11) / m2;
            break;
        }
        case Region::A1p:
        case Region::A2p: {
            const double den = m1 * m.g22 + m2 * m.g11;
            a.D11 = D0 * m.g22 / den;
            a.D21 = D0 * m.g11 / den;
            a.S1 = std::min(S0 / m1, a.D11);
            a.S2 = (S0 - m1 * a.S1) / m2;
            break;
        }
        case Region::B: {
            const double sq = std::sqrt(rho * m2);
            a.S1 = (1.0 + rho - 2.0 * sq) / (kSqrt2 * m1);
            a.D11 = (1.0 - rho) / (kSqrt2 * m1);
            a.S2 = kSqrt2 * sq / m2;
            a.D21 = 0.0;
            break;
        }
        case Region::Bp: {
            const double sq = std::sqrt(-rho * m2);
            a.S1 = (1.0 + rho) / (kSqrt2 * m1);
            a.D11 = (1.0 - rho - 2.0 * sq) / (kSqrt2 * m1);
            a.S2 = 0.0;
            a.D21 = kSqrt2 * sq / m2;
            break;
        }
        case Region::C:
        case Region::Cp: {
            a.S1 = (1.0 - m2) / (kSqrt2 * m1);
            a.D11 = a.S1;
            a.S2 = (m2 + rho) / (kSqrt2 * m2);
            a.D21 = (m2 - rho) / (kSqrt2 * m2);
            break;
        }
        case Region::D: {
            const double den = m1 * (m.K2 + m.L1) + m2 * m.g11;
            a.S1 = (m.K2 + m.L1) * (1.0 + rho) / (kSqrt2 * den);
            a.D11 = (1.0 - rho) / (kSqrt2 * m1);
            a.S2 = m.g11 * (1.0 + rho) / (kSqrt2 * den);
            a.D21 = 0.0;
            break;
        }
        case Region::Dp: {
            const double den = m1 * (m.K1 + m.L2) + m2 * m.g11;
            a.S1 = (1.0 + rho) / (kSqrt2 * m1);
            a.D11 = (m.K1 + m.L2) * (1.0 - rho) / (kSqrt2 * den);
            a.S2 = 0.0;
            a.D21 = m.g11 * (1.0 - rho) / (kSqrt2 * den);
            break;
        }
        case Region::E:
            // necessary-optimality averages of the interior-alpha problem,
            // with alpha taken from the numeric maximization
            return interior_alpha_averages(spec, translation_max(spec).alpha_star);
    }
    return a;
}

std::pair<double, double> effective_moduli(const CompositeSpec &spec, Region region) {
    const Mats m = mats(spec);
    const double rho = spec.rho(), m1 = spec.m1, m2 = spec.m2;
    switch (region) {
        case Region::A1:
        case Region::A2: {
            const double K = 1.0 / (m1 / m.g11 + m2 / m.g22) - m.L2;
            return {K, m.L2};
        }
        case Region::A1p:
        case Region::A2p: {
            const double L = 1.0 / (m1 / m.g11 + m2 / m.g22) - m.K2;
            return {m.K2, L};
        }
        case Region::B: {
            const double sq = std::sqrt(rho * m2);
            const double load = 1.0 + rho - 2.0 * sq;
            const double K = m.K2 - ((1.0 + rho) * sq - 2.0 * rho) * load /
                                        (2.0 * m1 * rho * (1.0 + rho)) * m.g11;
            const double L = sq * load / (2.0 * m1 * rho) * m.g11 - m.K2;
            return {K, L};
        }
        case Region::Bp: {
            const double sq = std::sqrt(-rho * m2);
            const double load = 1.0 - rho - 2.0 * sq;
            const double K = -sq * load / (2.0 * m1 * rho) * m.g11 - m.L2;
            const double L = m.L2 + ((1.0 - rho) * sq + 2.0 * rho) * load /
                                        (2.0 * m1 * rho * (1.0 - rho)) * m.g11;
            return {K, L};
        }
        case Region::C:
        case Region::Cp: {
            const double om2 = (1.0 - m2) * (1.0 - m2);
            const double K = 0.5 * ((m.K2 - m.L2) + om2 / (m1 * (1.0 + rho)) * m.g11 +
                                    (m2 * m2 + rho) / (m2 * (1.0 + rho)) * m.g22);
            const double L = 0.5 * (om2 / (m1 * (1.0 - rho)) * m.g11 +
                                    (m2 * m2 - rho) / (m2 * (1.0 - rho)) * m.g22 -
                                    (m.K2 - m.L2));
            return {K, L};
        }
        case Region::D: {
            const double K = 1.0 / (m1 / m.g11 + m2 / (m.K2 + m.L1)) - m.L1;
            return {K, m.L1};
        }
        case Region::Dp: {
            const double L = 1.0 / (m1 / m.g11 + m2 / (m.K1 + m.L2)) - m.K1;
            return {m.K1, L};
        }
        case Region::E:
            throw std::domain_error("effective_moduli: no closed form exists in region E");
    }
    throw std::domain_error("effective_moduli: unknown region");
}

std::pair<double, double> effective_moduli_from_envelope(const CompositeSpec &spec,
                                                         Region region, double fd_step) {
    if (region == Region::E)
        throw std::domain_error("effective_moduli_from_envelope: region E has no moduli");
    const double rho = spec.rho();
    if (!(std::fabs(rho) < 1.0))
        throw std::domain_error("effective_moduli_from_envelope: rho = +-1 is singular");

    const int cls = smooth_class(region);
    double h = fd_step;
    while (h >= 1e-9) {
        const double rp = rho + h, rm = rho - h;
        if (std::fabs(rp) <= 1.0 && std::fabs(rm) <= 1.0) {
            const CompositeSpec sp = spec.with_rho(rp), sm = spec.with_rho(rm);
            const Region regp = classify_region(sp), regm = classify_region(sm);
            if (smooth_class(regp) == cls && smooth_class(regm) == cls) {
                const double U = u_tr_region(spec, region);
                const double dU = (u_tr_region(sp, regp) - u_tr_region(sm, regm)) / (2.0 * h);
                const double K = U / (1.0 + rho) + (1.0 - rho) / (2.0 * (1.0 + rho)) * dU;
                const double L = U / (1.0 - rho) - (1.0 + rho) / (2.0 * (1.0 - rho)) * dU;
                return {K, L};
            }
        }
        h *= 0.1;
    }
    throw std::domain_error(
        "effective_moduli_from_envelope: boundary too close, no single-region stencil");
}

HSBounds hs_bounds(const Material &mat1, const Material &mat2, double m1, double m2) {
    const double aK = mat1.L;
    const double aL = 2.0 * mat1.K + mat1.L;
    const double K = 1.0 / (m1 / (mat1.K + aK) + m2 / (mat2.K + aK)) - aK;
    const double L = 1.0 / (m1 / (mat1.L + aL) + m2 / (mat2.L + aL)) - aL;
    return {K, L, aK, aL};
}

BoundResult bound(const CompositeSpec &spec) {
    const Region region = classify_region(spec);
    BoundResult r;
    r.region = region;
    if (region == Region::E) {
        const OracleResult o = translation_max(spec);
        r.U_tr = o.U;
        r.alpha_star = o.alpha_star;
        r.conjectured = true;
        r.averages = interior_alpha_averages(spec, o.alpha_star);
        return r;
    }
    r.U_tr = u_tr_region(spec, region);
    r.alpha_star = alpha_star(spec, region);
    const auto [K, L] = effective_moduli(spec, region);
    r.K_star = K;
    r.L_star = L;
    r.averages = phase_averages(spec, region);
    return r;
}

}  // namespace trilam
