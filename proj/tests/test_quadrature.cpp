#include "doctest.h"
#include "jb/quadrature.hpp"

#include <cmath>

using namespace jb;

TEST_CASE("low-degree polynomial is exact") {
    QuadResult q = integrate([](double x) { return x * x * x * x * x; }, 0.0, 2.0);
    CHECK(q.value == doctest::Approx(64.0 / 6.0).epsilon(1e-15));
    CHECK(q.converged);
}

TEST_CASE("exponential") {
    QuadResult q = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
    CHECK(q.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(q.converged);
}

TEST_CASE("additivity across a split point") {
    auto f = [](double x) { return 1.0 / (1.0 + x * x); };
    QuadResult whole = integrate(f, 0.0, 2.0, 1e-12);
    QuadResult left = integrate(f, 0.0, 0.7, 1e-12);
    QuadResult right = integrate(f, 0.7, 2.0, 1e-12);
    CHECK(whole.value == doctest::Approx(left.value + right.value).epsilon(1e-12));
    CHECK(whole.value == doctest::Approx(std::atan(2.0)).epsilon(1e-12));
}

TEST_CASE("high-degree monomial needs subdivision") {
    QuadResult q = integrate([](double x) { return std::pow(x, 41.0); }, 0.0, 1.0, 1e-12);
    CHECK(q.value == doctest::Approx(1.0 / 42.0).epsilon(1e-12));
    CHECK(q.converged);
    CHECK(q.panels >= 1);
}

TEST_CASE("integrable endpoint singularity") {
    QuadResult q =
        integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0, 1e-10);
    CHECK(q.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("empty interval") {
    QuadResult q = integrate([](double x) { return x; }, 1.0, 1.0);
    CHECK(q.value == 0.0);
    CHECK(q.converged);
}
