#include "jb/jacobi.hpp"

#include <cmath>
#include <limits>

namespace jb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Three-term recurrence in standard normalization with shared log rescaling.
// Invariant: P_n(x) = p1 * exp(ls) after the n-th step.
SignLog jac_sl(int k, double a, double b, double x) {
    if (k == 0) return {1, 0.0};
    double sab = a + b;
    double p0 = 1.0;
    double p1 = 0.5 * ((sab + 2.0) * x + (a - b));
    double ls = 0.0;
    for (int n = 2; n <= k; ++n) {
        double n2s = 2.0 * n + sab;
        double c1 = 2.0 * n * (n + sab) * (n2s - 2.0);
        double c2 = (n2s - 1.0) * (n2s * (n2s - 2.0) * x + a * a - b * b);
        double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * n2s;
        double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
        double m = std::max(std::fabs(p0), std::fabs(p1));
        if (m > 1e120 || (m > 0.0 && m < 1e-120)) {
            p0 /= m;
            p1 /= m;
            ls += std::log(m);
        }
    }
    if (p1 == 0.0) return {0, -kInf};
    return {sgn(p1), std::log(std::fabs(p1)) + ls};
}

void check_x(double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw domain_error("x must lie in [-1, 1]");
}

// exponent * log(base) with the 0^0 = 1 convention
double pow_log(double expo, double base) {
    if (expo == 0.0) return 0.0;
    return expo * std::log(base);
}

}  // namespace

double SignLog::value() const { return sign * std::exp(log); }
double EvalResult::value() const { return value_sign * std::exp(value_log); }
double EvalResult::deriv() const { return deriv_sign * std::exp(deriv_log); }

EvalResult eval_jacobi(const JacobiParams& p, double x) {
    validate(p);
    check_x(x);
    EvalResult r;
    SignLog v = jac_sl(p.k, p.alpha, p.beta, x);
    r.value_sign = v.sign;
    r.value_log = v.log;
    if (p.k == 0) {
        r.deriv_sign = 0;
        r.deriv_log = -kInf;
    } else {
        // d/dx P_k^{(a,b)} = (k + a + b + 1)/2 * P_{k-1}^{(a+1,b+1)}
        SignLog d = jac_sl(p.k - 1, p.alpha + 1.0, p.beta + 1.0, x);
        r.deriv_sign = d.sign;
        r.deriv_log = d.log + std::log(0.5 * (p.k + p.alpha + p.beta + 1.0));
    }
    return r;
}

SignLog eval_jacobi_second(const JacobiParams& p, double x) {
    validate(p);
    check_x(x);
    if (p.k < 2) return {0, -kInf};
    SignLog d2 = jac_sl(p.k - 2, p.alpha + 2.0, p.beta + 2.0, x);
    double f = 0.5 * (p.k + p.alpha + p.beta + 1.0);
    d2.log += std::log(f) + std::log(f + 0.5);
    return d2;
}

double log_norm2(const JacobiParams& p) {
    validate(p);
    double a = p.alpha, b = p.beta, s = a + b;
    if (p.k == 0) {
        // h_0^2 = 2^{s+1} Gamma(a+1) Gamma(b+1) / Gamma(s+2); this form stays
        // finite for s in (-2, 0] where the generic one hits a Gamma pole.
        return (s + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
               std::lgamma(s + 2.0);
    }
    double k = p.k;
    return (s + 1.0) * std::log(2.0) + std::lgamma(k + a + 1.0) + std::lgamma(k + b + 1.0) -
           std::log(2.0 * k + s + 1.0) - std::lgamma(k + 1.0) - std::lgamma(k + s + 1.0);
}

EvalResult eval_orthonormal(const JacobiParams& p, double x) {
    EvalResult r = eval_jacobi(p, x);
    double half_log_h2 = 0.5 * log_norm2(p);
    r.value_log -= half_log_h2;
    r.deriv_log -= half_log_h2;
    return r;
}

WeightedSq eval_weighted_sq(const JacobiParams& p, double x, double a_exp, double b_exp) {
    check_x(x);
    EvalResult o = eval_orthonormal(p, x);
    WeightedSq w;
    if (o.value_sign == 0) {
        w.log_value = -kInf;
        w.value = 0.0;
        return w;
    }
    w.log_value = pow_log(a_exp, 1.0 - x) + pow_log(b_exp, 1.0 + x) + 2.0 * o.value_log;
    w.value = std::exp(w.log_value);
    w.overflow = std::isinf(w.value) && w.value > 0.0;
    return w;
}

double eval_M(const JacobiParams& p, double x) {
    return eval_weighted_sq(p, x, p.alpha + 0.5, p.beta + 0.5).value;
}

double eval_Z(const DerivedParams& dp, double x) {
    if (x < dp.delta_minus || x > dp.delta_plus)
        throw domain_error("x outside the oscillatory window [delta_-, delta_+]");
    double d = dp.d(x);
    if (d <= 0.0) return 0.0;  // endpoints (d rounds to <= 0 only there)
    JacobiParams p{dp.k, dp.alpha, dp.beta};
    EvalResult o = eval_orthonormal(p, x);
    if (o.value_sign == 0) return 0.0;
    double lg = 0.25 * std::log(d) + 0.5 * (pow_log(dp.alpha, 1.0 - x) + pow_log(dp.beta, 1.0 + x));
    return o.value_sign * std::exp(lg + o.value_log);
}

double eval_Z(const JacobiParams& p, double x) { return eval_Z(derive(p), x); }

ZPair eval_Z_pair(const DerivedParams& dp, double x) {
    double d = dp.d(x);
    if (!(d > 0.0)) throw domain_error("x must lie strictly inside the oscillatory window");
    JacobiParams p{dp.k, dp.alpha, dp.beta};
    EvalResult o = eval_orthonormal(p, x);
    double lg = 0.25 * std::log(d) + 0.5 * (pow_log(dp.alpha, 1.0 - x) + pow_log(dp.beta, 1.0 + x));
    // Z = g * Phat, Z' = g * (Phat' + L * Phat) with L = g'/g
    double L = 0.25 * dp.d_deriv(x) / d - 0.5 * dp.alpha / (1.0 - x) + 0.5 * dp.beta / (1.0 + x);
    ZPair zp;
    zp.z = o.value_sign * std::exp(lg + o.value_log);
    double la = o.deriv_sign ? o.deriv_log : -kInf;
    double lb = (o.value_sign && L != 0.0) ? o.value_log + std::log(std::fabs(L)) : -kInf;
    double m = std::max(la, lb);
    if (std::isinf(m) && m < 0.0) {
        zp.zprime = 0.0;
        return zp;
    }
    double t = o.deriv_sign * std::exp(la - m) + sgn(L) * o.value_sign * std::exp(lb - m);
    zp.zprime = t * std::exp(lg + m);
    return zp;
}

}  // namespace jb
