// Sweep drivers: run the bound/identity checks over parameter grids and
// produce deterministic, order-stable reports.
//
// Item conventions:
//   bound checks     lhs = measured quantity, rhs = bound, pass iff lhs < rhs
//   equality checks  lhs = measured error,    rhs = tolerance
//   margin = (rhs - lhs)/rhs in both cases; failures carry witness_x.
// Items marked informational are recorded but never counted as failures.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "jb/params.hpp"
#include "jb/report.hpp"

namespace jb {

struct GridSpec {
    std::vector<int> k_values;
    std::vector<double> alpha_values;
    std::vector<double> beta_values;
    std::string filter;  // recorded in reports; hypothesis filters always apply
    int samples = 1000;
    std::uint64_t seed = 0;
};

struct CheckItem {
    int k = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool skipped = false;
    bool informational = false;
    std::optional<double> witness_x;
};

struct Summary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    double min_margin = std::numeric_limits<double>::infinity();
};

struct VerificationReport {
    std::string check_name;
    std::uint64_t seed = 0;
    GridSpec grid;
    std::vector<CheckItem> items;
    Summary summary;
    bool all_passed() const { return summary.failed == 0; }
};

// max |Z| on the window vs the universal constant sqrt(3)/5^{1/4}, plus a
// floor check (max |Z| > 0.70) for k >= 10.  Grid points with beta > alpha
// are emitted as skipped (symmetry covers them).
VerificationReport verify_theorem1(const GridSpec& grid);

// max M vs 3 alpha^{1/3} (1 + alpha/k)^{1/6} for k >= 6,
// alpha >= beta >= (1+sqrt(2))/4, the comparison against the older
// 2e(2+sqrt(alpha^2+beta^2))/pi baseline for alpha >= 5, and the sound
// support inequalities (pointwise chain through the window endpoints,
// epsilon budget, window gap, cos^2 tau'/cos^2 tau ratio).
VerificationReport verify_theorem2(const GridSpec& grid);

// Seeded random parameter sets; five exact-identity residuals per set
// (window-endpoint value of the sign polynomial, mu product, ODE,
// Wronskian-type relation, weighted integral), the 2000-point envelope
// check, and a closed-form anchor at k = 1, alpha = beta = 0.
VerificationReport verify_identities(const GridSpec& grid);

// Localization sweep: every local maximum of M must land inside
// (N'_-1, N'_+1) and the window inclusion chain must hold.
VerificationReport verify_grmax(const GridSpec& grid);

// Seeded random sets with alpha > beta > 0: bracket + sign change for x0,
// theta in (0, 2/3), finite-difference sign of S' against the sign
// polynomial, and max Z^2 = S(x0).
VerificationReport verify_sonin_suite(int n_sets, std::uint64_t seed);

struct ConjectureMetrics {
    double plateau_ratio = 0.0;  // max of sqrt(d) w Phat^2 over the window, / (2/pi)
    double mass = 0.0;           // integral of w Phat^2 over the window
    bool mass_converged = false;
};

ConjectureMetrics conjecture_metrics(const JacobiParams& p);

extern const char* const kToolVersion;

Json report_to_json(const VerificationReport& rep);
std::string report_to_csv(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

}  // namespace jb
