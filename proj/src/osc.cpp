#include "jb/osc.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "jb/jacobi.hpp"
#include "jb/quadrature.hpp"

namespace jb {

namespace {

double cross_term(const DerivedParams& dp) {
    return std::sqrt((dp.rho * dp.rho - dp.eta * dp.eta) * (dp.rho * dp.rho - dp.sigma * dp.sigma));
}

void require_k1(const DerivedParams& dp) {
    if (dp.k < 1) throw domain_error("k must be >= 1 (rho^2 - sigma^2 vanishes at k = 0)");
}

}  // namespace

OscWindow osc_window(const DerivedParams& dp) {
    require_k1(dp);
    double g = cross_term(dp);
    double r2 = dp.rho * dp.rho;
    return {(-g - dp.eta * dp.sigma) / r2, (g - dp.eta * dp.sigma) / r2};
}

double mu(const DerivedParams& dp, double x, int j) {
    require_k1(dp);
    return (cross_term(dp) + j * (x * dp.rho * dp.rho + dp.eta * dp.sigma)) / dp.rho;
}

double mu_product(const DerivedParams& dp, double x) {
    return (1.0 - x * x) * dp.rho * dp.rho - 2.0 * dp.eta * dp.sigma * x - dp.eta * dp.eta -
           dp.sigma * dp.sigma;
}

WValue eval_W(const JacobiParams& p, double x) {
    DerivedParams dp = derive(p);
    require_k1(dp);
    EvalResult e = eval_jacobi(p, x);
    // Scale y, y' jointly so the quadratic form is evaluated near unit size.
    double m = std::max(e.value_sign ? e.value_log : -1e308,
                        e.deriv_sign ? e.deriv_log : -1e308);
    double y = e.value_sign * std::exp(e.value_log - m);
    double yd = e.deriv_sign * std::exp(e.deriv_log - m);
    double r2 = dp.rho * dp.rho;
    double form = (r2 - dp.sigma * dp.sigma) * y * y - 4.0 * (dp.eta + dp.sigma * x) * y * yd +
                  4.0 * (1.0 - x * x) * yd * yd;
    WValue w;
    w.raw = form * std::exp(2.0 * m);
    if (form > 0.0) {
        w.log_weighted = std::log(form) + 2.0 * m + (dp.alpha + 1.0) * std::log1p(-x) +
                         (dp.beta + 1.0) * std::log1p(x);
        w.weighted = std::exp(w.log_weighted);
    } else {
        w.log_weighted = -std::numeric_limits<double>::infinity();
        w.weighted = form == 0.0 ? 0.0 : -std::exp(
            std::log(-form) + 2.0 * m + (dp.alpha + 1.0) * std::log1p(-x) +
            (dp.beta + 1.0) * std::log1p(x));
    }
    return w;
}

WronskianPair wronskian_pair(const JacobiParams& p, double x) {
    DerivedParams dp = derive(p);
    require_k1(dp);
    EvalResult ek = eval_jacobi(p, x);
    EvalResult em = eval_jacobi({p.k - 1, p.alpha, p.beta}, x);
    double l1 = (em.value_sign && ek.deriv_sign) ? em.value_log + ek.deriv_log : -1e308;
    double l2 = (ek.value_sign && em.deriv_sign) ? ek.value_log + em.deriv_log : -1e308;
    double m = std::max(l1, l2);
    double t = em.value_sign * ek.deriv_sign * std::exp(l1 - m) -
               ek.value_sign * em.deriv_sign * std::exp(l2 - m);
    WronskianPair out;
    out.lhs = t * std::exp(m);
    out.rhs = dp.rho / (2.0 * (dp.rho * dp.rho - dp.eta * dp.eta)) * eval_W(p, x).raw;
    return out;
}

double pointwise_bound_rhs(const DerivedParams& dp, double x) {
    OscWindow w = osc_window(dp);
    if (!(x > w.gamma_minus && x < w.gamma_plus))
        throw domain_error("x outside the inner interval (gamma_-, gamma_+)");
    return std::sqrt(dp.c2) / dp.d(x);
}

IntegralCheck check_integral_identity(const JacobiParams& p, double rel_tol) {
    DerivedParams dp = derive(p);
    require_k1(dp);
    QuadResult q = integrate([&](double x) { return eval_W(p, x).weighted; }, -1.0, 1.0, rel_tol);
    IntegralCheck c;
    c.lhs = q.value;
    double r2 = dp.rho * dp.rho;
    c.rhs = (r2 - dp.eta * dp.eta) * (r2 - dp.sigma * dp.sigma) / (dp.rho * (dp.rho - 1.0)) *
            std::exp(log_norm2(p));
    c.rel_err = std::fabs(c.lhs - c.rhs) / std::fabs(c.rhs);
    c.converged = q.converged;
    return c;
}

EnvelopeCheck w_envelope_check(const JacobiParams& p, int n_points) {
    DerivedParams dp = derive(p);
    OscWindow win = osc_window(dp);
    EnvelopeCheck out;
    out.points = n_points;
    out.min_margin_pointwise = 1.0;
    out.min_margin_weighted = 1.0;
    double mid = 0.5 * (win.gamma_minus + win.gamma_plus);
    double half = 0.5 * (win.gamma_plus - win.gamma_minus);
    double r2 = dp.rho * dp.rho;
    double log_w_rhs =
        std::log(dp.rho *
                 std::sqrt((r2 - dp.eta * dp.eta) * (r2 - dp.sigma * dp.sigma)) /
                 (dp.rho - 1.0)) +
        log_norm2(p);
    double log_c = 0.5 * std::log(dp.c2);
    for (int i = 0; i < n_points; ++i) {
        double x = mid + half * std::cos(std::numbers::pi * (2.0 * i + 1.0) / (2.0 * n_points));
        // pointwise: w Phat^2 < sqrt(c2)/d, strict
        double llhs = eval_weighted_sq(p, x, dp.alpha, dp.beta).log_value;
        double lrhs = log_c - std::log(dp.d(x));
        double margin = -std::expm1(llhs - lrhs);
        out.min_margin_pointwise = std::min(out.min_margin_pointwise, margin);
        if (!(llhs < lrhs)) out.violations.push_back({x, llhs, lrhs, "pointwise"});
        // weighted W envelope, 1e-12 relative slack
        double lw = eval_W(p, x).log_weighted;
        double wmargin = -std::expm1(lw - log_w_rhs);
        out.min_margin_weighted = std::min(out.min_margin_weighted, wmargin);
        if (!(lw <= log_w_rhs + 1e-12)) out.violations.push_back({x, lw, log_w_rhs, "weighted_w"});
    }
    return out;
}

}  // namespace jb
