#include "doctest.h"
#include "jb/extrema.hpp"
#include "jb/jacobi.hpp"

#include <cmath>
#include <numbers>

using namespace jb;

TEST_CASE("localization windows at pinned parameters") {
    LocalizationWindows w = localization_windows(derive({6, 1.0, 1.0}));
    CHECK(w.n_plus == doctest::Approx(0.98844904304962030).epsilon(1e-13));
    CHECK(w.np_plus == doctest::Approx(0.97518578091260425).epsilon(1e-13));
    CHECK(w.n_minus == doctest::Approx(-0.98844904304962030).epsilon(1e-13));
    CHECK(w.np_minus == doctest::Approx(-0.97518578091260425).epsilon(1e-13));
    LocalizationWindows v = localization_windows(derive({1, 2.0, 1.0}));
    CHECK(v.n_plus == doctest::Approx(0.72970610506369945).epsilon(1e-13));
    CHECK(v.np_plus == doctest::Approx(0.56629117115655854).epsilon(1e-13));
    CHECK(v.n_minus == doctest::Approx(-0.91895828373284388).epsilon(1e-13));
    CHECK(v.np_minus == doctest::Approx(-0.81149924009374624).epsilon(1e-13));
    CHECK_THROWS_AS(localization_windows(derive({0, 1.0, 1.0})), domain_error);
}

TEST_CASE("all maxima of a sine are found") {
    auto f = [](double x) { return std::sin(5.0 * x); };
    std::vector<MaxResult> m = find_local_maxima(f, 0.0, 3.0, 301);
    REQUIRE(m.size() == 3);
    for (int j = 0; j < 3; ++j) {
        double expect = std::numbers::pi / 10.0 + 2.0 * std::numbers::pi * j / 5.0;
        CHECK(m[j].x == doctest::Approx(expect).epsilon(1e-7));
        CHECK(m[j].value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("monotone function peaks at the endpoint") {
    MaxResult m = global_max([](double x) { return x; }, 0.0, 1.0, 51);
    CHECK(m.x == 1.0);
    CHECK(m.value == 1.0);
}

TEST_CASE("global max of the damped square at pinned parameters") {
    DerivedParams dp = derive({1, 2.0, 1.0});
    double w = dp.delta_plus - dp.delta_minus;
    auto f = [&](double x) { double z = eval_Z(dp, x); return z * z; };
    MaxResult m = global_max(f, dp.delta_minus + 1e-9 * w, dp.delta_plus - 1e-9 * w,
                             default_grid_size(1));
    CHECK(m.value == doctest::Approx(0.60018722563337793).epsilon(1e-9));
    // Argmax precision is limited by comparison noise on the flat peak,
    // about sqrt(eps), even though the interval shrinks to 1e-12.
    CHECK(m.x == doctest::Approx(-0.70260131559373846).epsilon(1e-6));
    CHECK(std::sqrt(m.value) == doctest::Approx(0.77471751344175635).epsilon(1e-9));

    DerivedParams sym = derive({6, 1.0, 1.0});
    double ws = sym.delta_plus - sym.delta_minus;
    auto g = [&](double x) { double z = eval_Z(sym, x); return z * z; };
    MaxResult s = global_max(g, sym.delta_minus + 1e-9 * ws, sym.delta_plus - 1e-9 * ws,
                             default_grid_size(6));
    CHECK(s.value == doctest::Approx(0.63514698017107873).epsilon(1e-9));
    CHECK(std::fabs(s.x) < 1e-7);
}

TEST_CASE("global max of the heavier-weight square") {
    JacobiParams p{1, 2.0, 1.0};
    auto f = [&](double x) { return eval_M(p, x); };
    MaxResult m = global_max(f, -1.0 + 1e-12, 1.0 - 1e-12, 4001);
    CHECK(m.value == doctest::Approx(0.78116013785591143).epsilon(1e-9));
    CHECK(m.x == doctest::Approx(0.41789083458002736).epsilon(1e-6));
}

TEST_CASE("search is deterministic") {
    DerivedParams dp = derive({13, 4.4, 2.1});
    double w = dp.delta_plus - dp.delta_minus;
    auto f = [&](double x) { double z = eval_Z(dp, x); return z * z; };
    MaxResult a = global_max(f, dp.delta_minus + 1e-9 * w, dp.delta_plus - 1e-9 * w,
                             default_grid_size(13));
    MaxResult b = global_max(f, dp.delta_minus + 1e-9 * w, dp.delta_plus - 1e-9 * w,
                             default_grid_size(13));
    CHECK(a.x == b.x);
    CHECK(a.value == b.value);
    CHECK(default_grid_size(13) == 1401);
}
