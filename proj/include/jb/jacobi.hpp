// Jacobi polynomial evaluation in signed-log form.
//
// Values are carried as (sign, log|value|) so degrees up to 10^4 and
// exponents up to 10^4 never overflow inside the recurrence.  Plain-double
// convenience accessors exist for the ranges where that is safe.

#pragma once

#include "jb/params.hpp"

namespace jb {

struct SignLog {
    int sign = 0;          // -1, 0, +1
    double log = 0.0;      // natural log of |value|; -inf when sign == 0
    double value() const;  // sign * exp(log); may overflow to +-inf
};

struct EvalResult {
    int value_sign = 0;
    double value_log = 0.0;
    int deriv_sign = 0;
    double deriv_log = 0.0;
    double value() const;
    double deriv() const;
};

// Standard normalization P_k^{(alpha,beta)}; rejects x outside [-1, 1].
EvalResult eval_jacobi(const JacobiParams& p, double x);

// Second derivative, same signed-log convention (exactly 0 for k < 2).
SignLog eval_jacobi_second(const JacobiParams& p, double x);

// log of the squared L2 norm of P_k under the weight (1-x)^a (1+x)^b.
double log_norm2(const JacobiParams& p);

// P_k / h_k, orthonormal under the weight.
EvalResult eval_orthonormal(const JacobiParams& p, double x);

struct WeightedSq {
    double log_value = 0.0;
    double value = 0.0;  // exp(log_value); +inf on overflow, not clamped
    bool overflow = false;
};

// (1-x)^a_exp (1+x)^b_exp * (orthonormal P_k)^2, assembled in log space.
// 0^0 counts as 1, so a zero exponent never produces a NaN at an endpoint.
WeightedSq eval_weighted_sq(const JacobiParams& p, double x, double a_exp, double b_exp);

// The envelope subject of the large-alpha bound:
// M(x) = (1-x)^{alpha+1/2} (1+x)^{beta+1/2} * (orthonormal P_k)^2.
double eval_M(const JacobiParams& p, double x);

// Damped form Z(x) = sqrt(sqrt(d(x)) * (1-x)^alpha (1+x)^beta) * orthonormal P_k.
// Defined on [delta_-, delta_+]; zero at the endpoints, rejects x outside.
double eval_Z(const DerivedParams& dp, double x);
double eval_Z(const JacobiParams& p, double x);

struct ZPair {
    double z = 0.0;
    double zprime = 0.0;
};

// Z and Z' at a point strictly inside the oscillatory window.
ZPair eval_Z_pair(const DerivedParams& dp, double x);

}  // namespace jb
