// Oscillatory-region bounds built from the quadratic form
//   W = (rho^2 - sigma^2) y^2 - 4 (eta + sigma x) y y' + 4 (1 - x^2) y'^2
// with y the standard-normalization polynomial.  W controls a pointwise
// envelope sqrt(c2)/d(x) for the weighted square on the inner interval
// (gamma_-, gamma_+) and satisfies an exact weighted integral identity.

#pragma once

#include <vector>

#include "jb/params.hpp"

namespace jb {

struct OscWindow {
    double gamma_minus = 0.0;
    double gamma_plus = 0.0;
};

// Inner interval where mu_-1 mu_+1 > 0.  Needs k >= 1.
OscWindow osc_window(const DerivedParams& dp);

// mu_j(x) = (sqrt((rho^2-eta^2)(rho^2-sigma^2)) + j (x rho^2 + eta sigma)) / rho
double mu(const DerivedParams& dp, double x, int j);

// mu_-1 mu_+1 collapses to (1-x^2) rho^2 - 2 eta sigma x - eta^2 - sigma^2.
double mu_product(const DerivedParams& dp, double x);

struct WValue {
    double raw = 0.0;       // W itself; may overflow for extreme parameters
    double weighted = 0.0;  // (1-x)^{alpha+1} (1+x)^{beta+1} W
    double log_weighted = 0.0;
};

WValue eval_W(const JacobiParams& p, double x);  // rejects k = 0

struct WronskianPair {
    double lhs = 0.0;  // P_{k-1} P_k' - P_k P_{k-1}'
    double rhs = 0.0;  // rho / (2 (rho^2 - eta^2)) * W
};

WronskianPair wronskian_pair(const JacobiParams& p, double x);

// sqrt(c2)/d(x); throws unless gamma_- < x < gamma_+.
double pointwise_bound_rhs(const DerivedParams& dp, double x);

struct IntegralCheck {
    double lhs = 0.0;  // integral of the weighted W over (-1, 1)
    double rhs = 0.0;  // (rho^2-eta^2)(rho^2-sigma^2) / (rho (rho-1)) * h_k^2
    double rel_err = 0.0;
    bool converged = false;
};

IntegralCheck check_integral_identity(const JacobiParams& p, double rel_tol = 1e-10);

struct EnvelopeViolation {
    double x;
    double log_lhs, log_rhs;
    const char* which;  // "pointwise" or "weighted_w"
};

struct EnvelopeCheck {
    int points = 0;
    double min_margin_pointwise = 0.0;  // min over grid of 1 - lhs/rhs
    double min_margin_weighted = 0.0;
    std::vector<EnvelopeViolation> violations;
};

// Chebyshev grid strictly inside (gamma_-, gamma_+); checks both
//   w(x) Phat^2 < sqrt(c2)/d(x)                        (strict)
//   weighted W <= rho sqrt((rho^2-eta^2)(rho^2-sigma^2))/(rho-1) h_k^2
// (the second with 1e-12 relative slack).  Comparisons are done in logs.
EnvelopeCheck w_envelope_check(const JacobiParams& p, int n_points = 2000);

}  // namespace jb
