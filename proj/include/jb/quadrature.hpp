// Adaptive Gauss-Legendre quadrature with an embedded 10/21 point pair.
// Bisection driven by the pair difference; hard caps on panel count and
// recursion depth so a bad integrand reports failure instead of spinning.

#pragma once

#include <functional>

namespace jb {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0);

}  // namespace jb
