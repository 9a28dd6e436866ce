// Sonin-type comparison machinery for the damped form Z.
//
// S(x) = Z^2 + Z'^2 / B is monotone wherever D keeps a fixed sign, where
// D is a degree-6 polynomial in x with coefficients in q, s satisfying
// sgn(S') = sgn(D) inside the window.  The global max of Z^2 is S(x0) at
// the unique interior root x0 of D.

#pragma once

#include <array>

#include "jb/params.hpp"

namespace jb {

struct SoninCoeffs {
    double A, B, E, D;
};

double eval_E(const DerivedParams& dp, double x);
double eval_A(const DerivedParams& dp, double x);
double eval_B(const DerivedParams& dp, double x);
double eval_B_deriv(const DerivedParams& dp, double x);  // analytic, no FD

// Coefficients of D, index i multiplies x^i.
std::array<double, 7> d_poly_coeffs(double q, double s);

// D(x) by Horner from the frozen coefficients.  This is the only production
// evaluation path; the r-free identity D = 2(1-x^2)^2 d^3 (4AB - B') serves
// as a cross-check in tests.
double eval_D(const DerivedParams& dp, double x);

SoninCoeffs sonin_coeffs(const DerivedParams& dp, double x);

// Both sides of the endpoint identity
//   D(delta_j) = -15 j cos^3(tau) cos^3(omega) sin^4(tau + j omega)
// evaluated in double-double from the same (q, s); j is +1 or -1.
// Cancellation at delta_j wipes out up to 9 digits in plain double.
double d_at_delta_dd(const DerivedParams& dp, int j);
double d_delta_identity_rhs_dd(const DerivedParams& dp, int j);

struct X0Result {
    double x0 = 0.0;
    double theta = 0.0;  // (-qs - x0)/c, in [0, 2/3)
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    bool fallback = false;  // bracket signs failed, root located by full scan
};

// Root of D in (-qs - (2/3)c, -qs].  For alpha = beta the polynomial is odd
// and the root sits exactly at -qs = 0.
X0Result find_x0(const DerivedParams& dp);

// S(x) = Z^2 + Z'^2/B at a point strictly inside the window; throws if the
// computed B is not positive there.
double eval_S(const DerivedParams& dp, double x);

}  // namespace jb
