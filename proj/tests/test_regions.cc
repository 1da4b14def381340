#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "trilam/numerics.hh"
#include "trilam/regions.hh"

using namespace trilam;

namespace {
const Material W{1.0, 2.0};  // weak-compliance (stiff) phase
const Material T{3.0, 4.0};

CompositeSpec spec(double m1, double m2, double rho) {
    return CompositeSpec{W, T, m1, m2, Loading{rho}};
}
}  // namespace

TEST_CASE("explicit boundary values") {
    CHECK(psi(Boundary::AC, W, T, 0.35, 0.35) == doctest::Approx(0.139285714286).epsilon(1e-10));
    CHECK(psi(Boundary::AB, W, T, 0.35, 1.0) == doctest::Approx(0.103546276419).epsilon(1e-10));
    CHECK(psi(Boundary::AB, W, T, 0.35, 0.8) == doctest::Approx(0.105126019281).epsilon(1e-10));
    CHECK(psi(Boundary::BD, W, T, 0.35, 0.8) == doctest::Approx(0.147176426994).epsilon(1e-10));
    CHECK(psi(Boundary::CE, W, T, 0.35, 0.2) == doctest::Approx(0.223770492).epsilon(1e-8));
}

TEST_CASE("boundary curves meet at rho = m2 and rho = -m2") {
    for (double m2 : {0.15, 0.25, 0.35, 0.5, 0.7}) {
        CHECK(psi(Boundary::AB, W, T, m2, m2) ==
              doctest::Approx(psi(Boundary::AC, W, T, m2, m2)).epsilon(1e-12));
        CHECK(psi(Boundary::BD, W, T, m2, m2) ==
              doctest::Approx(psi(Boundary::CE, W, T, m2, m2)).epsilon(1e-12));
        CHECK(psi(Boundary::ApBp, W, T, m2, -m2) ==
              doctest::Approx(psi(Boundary::ApCp, W, T, m2, -m2)).epsilon(1e-12));
        CHECK(psi(Boundary::BpDp, W, T, m2, -m2) ==
              doctest::Approx(psi(Boundary::CpE, W, T, m2, -m2)).epsilon(1e-12));
    }
}

TEST_CASE("B-D at rho = m2 relates to A-C by the modulus ratio") {
    for (double m2 : {0.2, 0.35, 0.55}) {
        const double lhs = psi(Boundary::BD, W, T, m2, m2);
        const double rhs = psi(Boundary::AC, W, T, m2, m2) * (T.K + T.L) / (T.K + W.L);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("implicit D-E residual") {
    CHECK(psi_residual(Boundary::DE, W, T, 0.17, 0.35, 0.8) ==
          doctest::Approx(1.603128564445).epsilon(1e-10));
    // the mirrored residual at the mirrored point (K2+L1 == K1+L2 for these materials)
    CHECK(psi_residual(Boundary::DpE, W, T, 0.17, 0.35, -0.8) ==
          doctest::Approx(-1.603128564445).epsilon(1e-10));
    CHECK_THROWS_AS(psi(Boundary::DE, W, T, 0.35, 0.5), std::domain_error);
}

TEST_CASE("psi domain errors") {
    CHECK_THROWS_AS(psi(Boundary::AB, W, T, 0.35, -0.5), std::domain_error);
    CHECK_THROWS_AS(psi(Boundary::AB, W, T, 0.35, 0.0), std::domain_error);
    CHECK_THROWS_AS(psi(Boundary::ApBp, W, T, 0.35, 0.5), std::domain_error);
    CHECK_THROWS_AS(psi(Boundary::AC, W, T, 0.35, -0.1), std::domain_error);
    CHECK_THROWS_AS(psi(Boundary::A1A2, W, T, 0.35, 0.2), std::domain_error);  // below m2
    CHECK_THROWS_AS(psi(Boundary::AC, W, T, 1.2, 0.2), std::domain_error);
}

TEST_CASE("classification of the reference points") {
    CHECK(classify_region(spec(0.05, 0.35, 1.0)) == Region::A1);
    CHECK(classify_region(spec(0.12, 0.35, 0.8)) == Region::B);
    CHECK(classify_region(spec(0.17, 0.35, 0.8)) == Region::D);
    CHECK(classify_region(spec(0.2, 0.35, 0.2)) == Region::C);
    CHECK(classify_region(spec(0.09, 0.35, 1.0)) == Region::A2);
    CHECK(classify_region(spec(0.3, 0.35, 0.05)) == Region::E);
    // mirrored labels for rho < 0
    CHECK(classify_region(spec(0.05, 0.35, -1.0)) == Region::A1p);
    CHECK(classify_region(spec(0.09, 0.35, -1.0)) == Region::A2p);
    CHECK(classify_region(spec(0.12, 0.35, -0.8)) == Region::Bp);
    CHECK(classify_region(spec(0.2, 0.35, -0.2)) == Region::Cp);
    CHECK(classify_region(spec(0.17, 0.35, -0.8)) == Region::Dp);
}

TEST_CASE("tie-break at rho = 0 picks unprimed labels") {
    CHECK(classify_region(spec(0.05, 0.35, 0.0)) == Region::A1);
    CHECK(classify_region(spec(0.4, 0.35, 0.0)) == Region::E);
}

TEST_CASE("classification margin reports the distance to the nearest curve") {
    const double p_ab = psi(Boundary::AB, W, T, 0.35, 0.8);
    const auto cl = classify(spec(p_ab - 1e-4, 0.35, 0.8));
    CHECK(cl.region == Region::A2);
    CHECK(cl.boundary_margin == doctest::Approx(1e-4).epsilon(1e-6));
}

TEST_CASE("boundary perturbation flips labels consistently") {
    const double m2 = 0.35, eps = 1e-9;
    for (double rho : {0.45, 0.6, 0.85}) {
        const double ab = psi(Boundary::AB, W, T, m2, rho);
        const double bd = psi(Boundary::BD, W, T, m2, rho);
        CHECK(classify_region(spec(ab - eps, m2, rho)) == Region::A2);
        CHECK(classify_region(spec(ab + eps, m2, rho)) == Region::B);
        CHECK(classify_region(spec(bd - eps, m2, rho)) == Region::B);
        const Region past = classify_region(spec(bd + eps, m2, rho));
        CHECK((past == Region::D || past == Region::E));
    }
    for (double rho : {0.05, 0.15, 0.3}) {
        const double ac = psi(Boundary::AC, W, T, m2, rho);
        const double ce = psi(Boundary::CE, W, T, m2, rho);
        CHECK(classify_region(spec(ac - eps, m2, rho)) == Region::A1);
        CHECK(classify_region(spec(ac + eps, m2, rho)) == Region::C);
        CHECK(classify_region(spec(ce - eps, m2, rho)) == Region::C);
        CHECK(classify_region(spec(ce + eps, m2, rho)) == Region::E);
    }
}

TEST_CASE("a dense slice is tiled by exactly the expected labels") {
    const double m2 = 0.35;
    std::set<Region> seen;
    for (int i = 0; i < 101; ++i)
        for (int j = 0; j < 101; ++j) {
            const double rho = -1.0 + 2.0 * (i + 0.5) / 101;
            const double m1 = (1.0 - m2) * (j + 0.5) / 101;
            seen.insert(classify_region(spec(m1, m2, rho)));
        }
    CHECK(seen.size() == 11);
}

TEST_CASE("boundary_samples satisfies the boundary equations") {
    for (Boundary k : {Boundary::AC, Boundary::CE, Boundary::AB, Boundary::BD, Boundary::ApCp,
                       Boundary::CpE, Boundary::ApBp, Boundary::BpDp}) {
        const auto pts = boundary_samples(k, W, T, 0.35, 9);
        CHECK(pts.size() == 9);
        for (const auto &[rho, m1] : pts)
            CHECK(std::fabs(m1 - psi(k, W, T, 0.35, rho)) <= 1e-12);
    }
    for (Boundary k : {Boundary::DE, Boundary::DpE}) {
        const auto pts = boundary_samples(k, W, T, 0.35, 9);
        for (const auto &[rho, m1] : pts)
            CHECK(std::fabs(psi_residual(k, W, T, m1, 0.35, rho)) <= 1e-12);
    }
    CHECK_THROWS(boundary_samples(Boundary::AC, W, T, 0.35, 1));
}

TEST_CASE("the primed atlas is not the mirror image for asymmetric moduli") {
    // K2+L1 != K1+L2 here, so psi_BD and psi_B'D' genuinely differ
    const Material t2{3.0, 10.0};
    const double bd = psi(Boundary::BD, W, t2, 0.35, 0.8);
    const double bpdp = psi(Boundary::BpDp, W, t2, 0.35, -0.8);
    CHECK(std::fabs(bd - bpdp) > 1e-3);
    const double base = std::sqrt(0.8 * 0.35) * (1.8 - 2.0 * std::sqrt(0.8 * 0.35)) / 1.6 * 3.0;
    CHECK(bd == doctest::Approx(base / (t2.K + W.L)).epsilon(1e-12));
    CHECK(bpdp == doctest::Approx(base / (W.K + t2.L)).epsilon(1e-12));
}
