// Parameter bundle for Jacobi-type oscillation analysis.
//
// Everything downstream works in the scaled variables
//   r = 2k + alpha + beta + 1,  q = (alpha - beta)/r,  s = (alpha + beta)/r,
// with q = sin(omega), s = sin(tau).  The oscillatory window is
// (delta_-1, delta_+1) where delta_j = j*cos(tau + j*omega), and
//   d(x) = (x - delta_-1)(delta_+1 - x) = 1 - q^2 - s^2 - 2qsx - x^2.

#pragma once

#include <stdexcept>
#include <string>

namespace jb {

struct JacobiParams {
    int k = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Thrown when inputs violate a documented hypothesis (k range, alpha/beta
// range, x outside the admissible interval).  The message names the
// violated condition; the CLI maps this to exit code 2.
class domain_error : public std::runtime_error {
  public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kMaxDegree = 10000;
constexpr double kMaxParam = 10000.0;

// Reject k < 0, alpha or beta <= -1, or values beyond the representable
// range above.  Modules with stricter hypotheses layer their own checks.
void validate(const JacobiParams& p);

struct DerivedParams {
    int k;
    double alpha, beta;
    double sigma, eta;     // alpha + beta, alpha - beta
    double r, rho;         // r = 2k + sigma + 1, rho = r - 1
    double q, s;           // sin(omega), sin(tau)
    double tau, omega;
    double cos_tau, cos_omega;
    double c2;             // cos^2(tau) cos^2(omega) = (1 - q^2)(1 - s^2)
    double c;              // sqrt(c2)
    double sin_tau_prime;  // (sigma + 1)/r
    double delta_minus, delta_plus;

    // d(x) = 1 - q^2 - s^2 - 2qsx - x^2, positive strictly inside the window
    double d(double x) const { return (1.0 - q * q) - s * (s + 2.0 * q * x) - x * x; }
    double d_deriv(double x) const { return -2.0 * (q * s + x); }

    bool inside_window(double x) const { return x > delta_minus && x < delta_plus; }
};

DerivedParams derive(const JacobiParams& p);

}  // namespace jb
