#include "trilam/regions.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trilam/numerics.hh"

namespace trilam {

const char *to_string(Region r) {
    switch (r) {
        case Region::A1: return "A1";
        case Region::A2: return "A2";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::D: return "D";
        case Region::E: return "E";
        case Region::A1p: return "A1'";
        case Region::A2p: return "A2'";
        case Region::Bp: return "B'";
        case Region::Cp: return "C'";
        case Region::Dp: return "D'";
    }
    return "?";
}

bool is_primed(Region r) {
    switch (r) {
        case Region::A1p: case Region::A2p: case Region::Bp: case Region::Cp: case Region::Dp:
            return true;
        default:
            return false;
    }
}

bool is_attainable(Region r) {
    switch (r) {
        case Region::A1: case Region::A2: case Region::B: case Region::C:
        case Region::A1p: case Region::A2p: case Region::Bp: case Region::Cp:
            return true;
        default:
            return false;
    }
}

const char *to_string(Boundary b) {
    switch (b) {
        case Boundary::AB: return "A-B";
        case Boundary::BD: return "B-D";
        case Boundary::AC: return "A-C";
        case Boundary::CE: return "C-E";
        case Boundary::ApBp: return "A'-B'";
        case Boundary::BpDp: return "B'-D'";
        case Boundary::ApCp: return "A'-C'";
        case Boundary::CpE: return "C'-E";
        case Boundary::DE: return "D-E";
        case Boundary::DpE: return "D'-E";
        case Boundary::A1A2: return "A1-A2";
        case Boundary::A1pA2p: return "A1'-A2'";
    }
    return "?";
}

namespace {

[[noreturn]] void bad_range(Boundary kind, double rho) {
    throw std::domain_error(std::string("psi(") + to_string(kind) +
                            "): rho = " + std::to_string(rho) + " outside the branch domain");
}

void check_m2(double m2) {
    if (!(m2 > 0.0 && m2 < 1.0)) throw std::domain_error("psi: m2 must lie in (0, 1)");
}

}  // namespace

double psi(Boundary kind, const Material &mat1, const Material &mat2, double m2, double rho) {
    check_m2(m2);
    const double K1 = mat1.K, L1 = mat1.L, K2 = mat2.K, L2 = mat2.L;
    const double g11 = K1 + L1;
    switch (kind) {
        case Boundary::AB:
        case Boundary::BD: {
            if (!(rho > 0.0 && rho <= 1.0)) bad_range(kind, rho);
            const double sq = std::sqrt(rho * m2);
            const double base = sq * (1.0 + rho - 2.0 * sq) / (2.0 * rho);
            return base * g11 / (kind == Boundary::AB ? K2 + L2 : K2 + L1);
        }
        case Boundary::AC: {
            if (!(rho >= 0.0 && rho <= 1.0)) bad_range(kind, rho);
            return m2 * (1.0 - m2) * g11 / ((m2 + rho) * (K2 + L2));
        }
        case Boundary::CE: {
            if (!(rho >= 0.0 && rho <= 1.0)) bad_range(kind, rho);
            return m2 * (1.0 - m2) * g11 / ((m2 + rho) * (K2 + L2) - 2.0 * (L2 - L1) * rho);
        }
        case Boundary::ApBp:
        case Boundary::BpDp: {
            if (!(rho < 0.0 && rho >= -1.0)) bad_range(kind, rho);
            const double sq = std::sqrt(-rho * m2);
            const double base = -sq * (1.0 - rho - 2.0 * sq) / (2.0 * rho);
            return base * g11 / (kind == Boundary::ApBp ? K2 + L2 : K1 + L2);
        }
        case Boundary::ApCp: {
            if (!(rho <= 0.0 && rho >= -1.0)) bad_range(kind, rho);
            return m2 * (1.0 - m2) * g11 / ((m2 - rho) * (K2 + L2));
        }
        case Boundary::CpE: {
            if (!(rho <= 0.0 && rho >= -1.0)) bad_range(kind, rho);
            return m2 * (1.0 - m2) * g11 / ((m2 + rho) * (K2 + L2) - 2.0 * (L2 + K1) * rho);
        }
        case Boundary::A1A2: {
            if (!(rho >= m2 && rho <= 1.0)) bad_range(kind, rho);
            return psi(Boundary::AC, mat1, mat2, m2, rho);
        }
        case Boundary::A1pA2p: {
            if (!(rho <= -m2 && rho >= -1.0)) bad_range(kind, rho);
            return psi(Boundary::ApCp, mat1, mat2, m2, rho);
        }
        case Boundary::DE:
        case Boundary::DpE:
            throw std::domain_error("psi: D-E and D'-E are implicit; use psi_residual");
    }
    throw std::domain_error("psi: unknown boundary kind");
}

double psi_residual(Boundary kind, const Material &mat1, const Material &mat2,
                    double m1, double m2, double rho) {
    check_m2(m2);
    if (!(m1 > 0.0)) throw std::domain_error("psi_residual: m1 must be positive");
    const double K1 = mat1.K, L1 = mat1.L, K2 = mat2.K, L2 = mat2.L;
    const double g11 = K1 + L1;
    if (kind == Boundary::DE) {
        const double den = m1 * (K2 + L1) + m2 * g11;
        const double hat = -m2 * g11 * ((m1 + m2) * g11 + 2.0 * m1 * (K2 - K1)) /
                           (2.0 * m1 * den * den);
        return hat * (1.0 + rho) * (1.0 + rho) + 2.0 * rho * (1.0 - m1) / m1;
    }
    if (kind == Boundary::DpE) {
        const double den = m1 * (K1 + L2) + m2 * g11;
        const double hat = m2 * g11 * ((m1 + m2) * g11 + 2.0 * m1 * (L2 - L1)) /
                           (2.0 * m1 * den * den);
        return hat * (1.0 - rho) * (1.0 - rho) + 2.0 * rho * (1.0 - m1) / m1;
    }
    throw std::domain_error("psi_residual: only D-E and D'-E are implicit boundaries");
}

namespace {

// m1-distance to the D-E (or D'-E) curve at fixed rho, bisected inside the
// strip past the B-D / B'-D' threshold; +inf when the curve is absent there.
double implicit_margin(Boundary kind, const CompositeSpec &s, double lo) {
    const double hi = 1.0 - s.m2 - 1e-12;
    if (!(lo < hi)) return std::numeric_limits<double>::infinity();
    auto f = [&](double m1) { return psi_residual(kind, s.mat1, s.mat2, m1, s.m2, s.rho()); };
    const double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return std::fabs(s.m1 - lo);
    if ((flo > 0.0) == (fhi > 0.0)) return std::numeric_limits<double>::infinity();
    const double root = bisect_root(f, lo, hi, 1e-14);
    return std::fabs(s.m1 - root);
}

}  // namespace

Classification classify(const CompositeSpec &spec) {
    const double rho = spec.rho(), m1 = spec.m1, m2 = spec.m2;
    const Material &w = spec.mat1;
    const Material &t = spec.mat2;

    double margin = std::numeric_limits<double>::infinity();
    auto note = [&](double boundary_m1) { margin = std::min(margin, std::fabs(m1 - boundary_m1)); };

    Region region;
    if (rho >= 0.0) {
        const double p_ac = psi(Boundary::AC, w, t, m2, rho);
        note(p_ac);
        if (m1 <= p_ac) {
            region = Region::A1;
        } else if (rho >= m2) {
            const double p_ab = psi(Boundary::AB, w, t, m2, rho);
            const double p_bd = psi(Boundary::BD, w, t, m2, rho);
            note(p_ab);
            note(p_bd);
            if (m1 <= p_ab)
                region = Region::A2;
            else if (m1 <= p_bd)
                region = Region::B;
            else
                region = psi_residual(Boundary::DE, w, t, m1, m2, rho) >= 0.0 ? Region::D
                                                                              : Region::E;
            if (region == Region::D || region == Region::E)
                margin = std::min(margin, implicit_margin(Boundary::DE, spec, p_bd));
        } else {
            const double p_ce = psi(Boundary::CE, w, t, m2, rho);
            note(p_ce);
            if (m1 <= p_ce)
                region = Region::C;
            else
                region = psi_residual(Boundary::DE, w, t, m1, m2, rho) >= 0.0 ? Region::D
                                                                              : Region::E;
            if (region == Region::D || region == Region::E)
                margin = std::min(margin, implicit_margin(Boundary::DE, spec, p_ce));
        }
    } else {
        const double p_ac = psi(Boundary::ApCp, w, t, m2, rho);
        note(p_ac);
        if (m1 <= p_ac) {
            region = Region::A1p;
        } else if (rho <= -m2) {
            const double p_ab = psi(Boundary::ApBp, w, t, m2, rho);
            const double p_bd = psi(Boundary::BpDp, w, t, m2, rho);
            note(p_ab);
            note(p_bd);
            if (m1 <= p_ab)
                region = Region::A2p;
            else if (m1 <= p_bd)
                region = Region::Bp;
            else
                region = psi_residual(Boundary::DpE, w, t, m1, m2, rho) <= 0.0 ? Region::Dp
                                                                               : Region::E;
            if (region == Region::Dp || region == Region::E)
                margin = std::min(margin, implicit_margin(Boundary::DpE, spec, p_bd));
        } else {
            const double p_ce = psi(Boundary::CpE, w, t, m2, rho);
            note(p_ce);
            if (m1 <= p_ce)
                region = Region::Cp;
            else
                region = psi_residual(Boundary::DpE, w, t, m1, m2, rho) <= 0.0 ? Region::Dp
                                                                               : Region::E;
            if (region == Region::Dp || region == Region::E)
                margin = std::min(margin, implicit_margin(Boundary::DpE, spec, p_ce));
        }
    }
    return {region, margin};
}

Region classify_region(const CompositeSpec &spec) { return classify(spec).region; }

namespace {

struct RhoRange {
    double lo, hi;
};

RhoRange explicit_range(Boundary kind, double m2) {
    switch (kind) {
        case Boundary::AC:
        case Boundary::CE: return {0.0, m2};
        case Boundary::AB:
        case Boundary::BD:
        case Boundary::A1A2: return {m2, 1.0};
        case Boundary::ApCp:
        case Boundary::CpE: return {-m2, 0.0};
        case Boundary::ApBp:
        case Boundary::BpDp:
        case Boundary::A1pA2p: return {-1.0, -m2};
        default: return {0.0, 0.0};
    }
}

}  // namespace

std::vector<std::pair<double, double>> boundary_samples(
    Boundary kind, const Material &mat1, const Material &mat2, double m2, int count) {
    if (count < 2) throw std::domain_error("boundary_samples: count must be >= 2");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(count));

    if (kind != Boundary::DE && kind != Boundary::DpE) {
        const RhoRange r = explicit_range(kind, m2);
        for (int k = 0; k < count; ++k) {
            const double rho = r.lo + (r.hi - r.lo) * k / (count - 1);
            // the AB/BD formulas are singular at rho = 0; nudge inside
            double rr = rho;
            if ((kind == Boundary::AB || kind == Boundary::BD) && rr <= 0.0) rr = 1e-12;
            if ((kind == Boundary::ApBp || kind == Boundary::BpDp) && rr >= 0.0) rr = -1e-12;
            pts.emplace_back(rr, psi(kind, mat1, mat2, m2, rr));
        }
        return pts;
    }

    // Implicit curve: it leaves P2 (rho = +-m2 on the B-D / B'-D' threshold)
    // and exits through m1 = 1 - m2. Locate the exit anisotropy by scanning,
    // then place the requested points between the two.
    const bool primed = (kind == Boundary::DpE);
    auto strip_lo = [&](double rho) {
        return psi(primed ? Boundary::BpDp : Boundary::BD, mat1, mat2, m2, rho);
    };
    auto residual = [&](double m1, double rho) {
        return psi_residual(kind, mat1, mat2, m1, m2, rho);
    };
    auto has_root = [&](double rho) {
        const double lo = strip_lo(rho), hi = 1.0 - m2 - 1e-12;
        if (!(lo < hi)) return false;
        const double flo = residual(lo, rho), fhi = residual(hi, rho);
        // the curve leaves the corner of the strip, where flo is fp noise
        if (std::fabs(flo) <= 1e-13 || std::fabs(fhi) <= 1e-13) return true;
        return (flo > 0.0) != (fhi > 0.0);
    };

    const double rho_start = primed ? -m2 : m2;
    const double rho_end = primed ? -1.0 : 1.0;
    if (!has_root(rho_start))
        throw std::runtime_error("boundary_samples: implicit boundary absent from the scan strip");
    double rho_in = rho_start, rho_out = rho_end;
    if (has_root(rho_end)) {
        rho_in = rho_end;  // curve spans the whole range
    } else {
        const int scan = 2048;
        for (int k = 1; k <= scan; ++k) {
            const double rho = rho_start + (rho_end - rho_start) * k / scan;
            if (has_root(rho))
                rho_in = rho;
            else {
                rho_out = rho;
                break;
            }
        }
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (rho_in + rho_out);
            (has_root(mid) ? rho_in : rho_out) = mid;
        }
    }

    for (int k = 0; k < count; ++k) {
        const double rho = rho_start + (rho_in - rho_start) * k / (count - 1);
        const double lo = strip_lo(rho), hi = 1.0 - m2 - 1e-12;
        double root;
        const double flo = residual(lo, rho), fhi = residual(hi, rho);
        if (std::fabs(flo) <= 1e-13 && (flo > 0.0) == (fhi > 0.0)) {
            root = lo;
        } else if (std::fabs(fhi) <= 1e-13 && (flo > 0.0) == (fhi > 0.0)) {
            root = hi;
        } else {
            root = bisect_root([&](double m1) { return residual(m1, rho); }, lo, hi, 1e-15);
        }
        pts.emplace_back(rho, root);
    }
    return pts;
}

}  // namespace trilam
