#include "doctest.h"
#include "jb/jacobi.hpp"
#include "jb/sonin.hpp"

#include <cmath>

using namespace jb;

namespace {
const DerivedParams dp121 = derive({1, 2.0, 1.0});
}

TEST_CASE("coefficient functions at a pinned point") {
    CHECK(eval_E(dp121, 0.2) == doctest::Approx(1.0630617283950617).epsilon(1e-14));
    CHECK(eval_A(dp121, 0.2) == doctest::Approx(-0.0099885844748858447).epsilon(1e-13));
    CHECK(eval_B(dp121, 0.2) == doctest::Approx(6.9942916673182377).epsilon(1e-13));
    CHECK(eval_B_deriv(dp121, 0.2) == doctest::Approx(1.5165002587257802).epsilon(1e-12));
    CHECK(eval_D(dp121, 0.2) == doctest::Approx(-0.90443702606310014).epsilon(1e-13));
}

TEST_CASE("analytic B' matches finite differences") {
    for (double x : {-0.5, 0.0, 0.2, 0.6}) {
        double h = 1e-5;
        double fd = (eval_B(dp121, x + h) - eval_B(dp121, x - h)) / (2.0 * h);
        CHECK(eval_B_deriv(dp121, x) == doctest::Approx(fd).epsilon(1e-6));
    }
    DerivedParams dq = derive({3, 1.7, 0.3});
    double h = 1e-5;
    double fd = (eval_B(dq, -0.5 + h) - eval_B(dq, -0.5 - h)) / (2.0 * h);
    CHECK(eval_B_deriv(dq, -0.5) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("Horner D agrees with the r-free assembly") {
    struct Case {
        JacobiParams p;
        double x;
    };
    for (auto [p, x] : {Case{{1, 2.0, 1.0}, 0.2}, Case{{3, 1.7, 0.3}, -0.5}}) {
        DerivedParams dp = derive(p);
        double om = 1.0 - x * x;
        double d = dp.d(x);
        double rhs = 2.0 * om * om * d * d * d *
                     (4.0 * eval_A(dp, x) * eval_B(dp, x) - eval_B_deriv(dp, x));
        CHECK(eval_D(dp, x) == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("frozen coefficients at rational q, s") {
    std::array<double, 7> c = d_poly_coeffs(1.0 / 6.0, 0.5);
    CHECK(c[0] == doctest::Approx(-2177.0 / 5184.0).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(-13645.0 / 5832.0).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(-6359.0 / 7776.0).epsilon(1e-14));
    CHECK(c[3] == doctest::Approx(2407.0 / 1296.0).epsilon(1e-14));
    CHECK(c[4] == doctest::Approx(1369.0 / 1728.0).epsilon(1e-14));
    CHECK(c[5] == doctest::Approx(11.0 / 144.0).epsilon(1e-14));
    CHECK(c[6] == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("endpoint identity in double-double") {
    // Plain double loses up to 9 digits here; the dd path must agree to
    // rounding of the two returned doubles.
    CHECK(d_at_delta_dd(dp121, +1) == doctest::Approx(-1.5410888018462308).epsilon(1e-13));
    CHECK(d_at_delta_dd(dp121, -1) == doctest::Approx(0.13803372854376170).epsilon(1e-13));
    for (auto p : {JacobiParams{1, 2.0, 1.0}, {17, 33.2, 0.4}, {6, 1.0, 1.0}}) {
        DerivedParams dp = derive(p);
        for (int j : {+1, -1}) {
            double lhs = d_at_delta_dd(dp, j);
            double rhs = d_delta_identity_rhs_dd(dp, j);
            CHECK(std::fabs(lhs - rhs) <= 1e-13 * std::max(1.0, std::fabs(rhs)));
        }
    }
}

TEST_CASE("root of D and the comparison function") {
    X0Result r = find_x0(dp121);
    CHECK_FALSE(r.fallback);
    CHECK(r.bracket_lo == -dp121.q * dp121.s - (2.0 / 3.0) * dp121.c);
    CHECK(r.bracket_hi == -dp121.q * dp121.s);
    CHECK(r.x0 == doctest::Approx(-0.19908099904108498).epsilon(1e-11));
    CHECK(r.theta == doctest::Approx(0.13554978648938072).epsilon(1e-10));
    CHECK(r.theta >= 0.0);
    CHECK(r.theta < 2.0 / 3.0);
    CHECK(eval_S(dp121, r.x0) == doctest::Approx(0.6151665792499745).epsilon(1e-11));
    CHECK(eval_S(dp121, 0.2) == doctest::Approx(0.6031468478872373).epsilon(1e-12));
}

TEST_CASE("symmetric parameters put the root at zero") {
    X0Result r = find_x0(derive({7, 3.3, 3.3}));
    CHECK(r.x0 == 0.0);
    CHECK(r.theta == 0.0);
    CHECK_FALSE(r.fallback);
}

TEST_CASE("S dominates Z^2 and is stationary at the maximum") {
    // S decreases left of x0 and increases nowhere right of it, so S(x0)
    // bounds every Z^2 value; at the argmax of Z^2 the Z' term vanishes.
    X0Result r = find_x0(dp121);
    double s0 = eval_S(dp121, r.x0);
    CHECK(s0 > 0.60018722563337793);
    CHECK(eval_S(dp121, -0.70260131559373846) ==
          doctest::Approx(0.60018722563337793).epsilon(1e-9));
    for (double u : {0.1, 0.35, 0.65, 0.9}) {
        double x = dp121.delta_minus + (dp121.delta_plus - dp121.delta_minus) * u;
        CHECK(eval_S(dp121, x) <= s0 * (1.0 + 1e-12));
        double z = eval_Z(dp121, x);
        CHECK(z * z <= eval_S(dp121, x) * (1.0 + 1e-12));
    }
}

TEST_CASE("B stays positive and D changes sign once") {
    DerivedParams dp = derive({9, 4.2, 0.9});
    double w = dp.delta_plus - dp.delta_minus;
    double a = dp.delta_minus + 1e-6 * w;
    double b = dp.delta_plus - 1e-6 * w;
    int flips = 0;
    double prev = eval_D(dp, a);
    for (int i = 0; i < 1000; ++i) {
        double x = a + (b - a) * i / 999.0;
        CHECK(eval_B(dp, x) > 0.0);
        double f = eval_D(dp, x);
        if ((f > 0.0) != (prev > 0.0)) ++flips;
        prev = f;
    }
    CHECK(flips == 1);
}

TEST_CASE("S rejects points outside the window") {
    CHECK_THROWS_AS(eval_S(dp121, dp121.delta_plus + 0.01), domain_error);
    CHECK_THROWS_AS(eval_S(dp121, -0.99), domain_error);
}
