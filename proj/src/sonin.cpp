#include "jb/sonin.hpp"

#include <cmath>

#include "jb/dd.hpp"
#include "jb/jacobi.hpp"

namespace jb {

namespace {

// Shared coefficient construction so the double and double-double paths
// cannot drift apart: T is double or dd.
template <typename T>
std::array<T, 7> d_coeffs_t(T q, T s) {
    T q2 = q * q, s2 = s * s;
    T q4 = q2 * q2, s4 = s2 * s2;
    T q6 = q4 * q2, s6 = s4 * s2;
    T qs = q * s;
    std::array<T, 7> c{};
    c[6] = qs;
    c[5] = T(4.0) * q2 + T(4.0) * s2 - T(5.0) * q2 * s2 - T(1.0);
    c[4] = qs * (T(12.0) - T(9.0) * q2 - T(9.0) * s2 + q2 * s2);
    c[3] = T(2.0) * (T(1.0) + q2 + s2 - T(5.0) * q4 - T(5.0) * s4 - T(5.0) * q2 * s2 +
                     q4 * s2 + q2 * s4);
    c[2] = -(qs * (T(7.0) + T(10.0) * q2 + T(10.0) * s2 - T(4.0) * q2 * s2 + q4 + s4));
    c[1] = -(T(1.0) + T(6.0) * q2 + T(6.0) * s2 - T(6.0) * q4 - T(6.0) * s4 - q6 - s6 +
             T(9.0) * q2 * s2 + T(3.0) * q2 * s4 + T(3.0) * q4 * s2);
    c[0] = -(T(3.0) * qs * (T(2.0) - q2 - s2 - q4 - s4 + T(3.0) * q2 * s2));
    return c;
}

template <typename T>
T horner(const std::array<T, 7>& c, T x) {
    T y = c[6];
    for (int i = 5; i >= 0; --i) y = y * x + c[i];
    return y;
}

}  // namespace

double eval_E(const DerivedParams& dp, double x) {
    double q = dp.q, s = dp.s;
    double q2 = q * q, s2 = s * s;
    return 2.0 * q * s * x * x * x - (1.0 - 4.0 * q2 - 4.0 * s2 + q2 * s2) * x * x +
           6.0 * q * s * x + 1.0 - q2 * q2 - s2 * s2 + 3.0 * q2 * s2;
}

double eval_A(const DerivedParams& dp, double x) {
    double q = dp.q, s = dp.s;
    double num = x * x * x + 3.0 * q * s * x * x + (2.0 * q * q + 2.0 * s * s - 1.0) * x + q * s;
    return -num / (2.0 * (1.0 - x * x) * dp.d(x));
}

double eval_B(const DerivedParams& dp, double x) {
    double d = dp.d(x);
    double om = 1.0 - x * x;
    return d * dp.r * dp.r / (4.0 * om * om) + eval_E(dp, x) / (4.0 * om * d * d);
}

double eval_B_deriv(const DerivedParams& dp, double x) {
    double q = dp.q, s = dp.s;
    double d = dp.d(x);
    double om = 1.0 - x * x;
    double ddx = dp.d_deriv(x);
    double E = eval_E(dp, x);
    double Ed = 6.0 * q * s * x * x - 2.0 * (1.0 - 4.0 * q * q - 4.0 * s * s + q * q * s * s) * x +
                6.0 * q * s;
    double t1 = dp.r * dp.r * (ddx * om + 4.0 * x * d) / (4.0 * om * om * om);
    double t2 = (Ed * om * d + 2.0 * x * E * d - 2.0 * E * om * ddx) / (4.0 * om * om * d * d * d);
    return t1 + t2;
}

std::array<double, 7> d_poly_coeffs(double q, double s) { return d_coeffs_t<double>(q, s); }

double eval_D(const DerivedParams& dp, double x) {
    return horner(d_coeffs_t<double>(dp.q, dp.s), x);
}

SoninCoeffs sonin_coeffs(const DerivedParams& dp, double x) {
    return {eval_A(dp, x), eval_B(dp, x), eval_E(dp, x), eval_D(dp, x)};
}

double d_at_delta_dd(const DerivedParams& dp, int j) {
    dd q(dp.q), s(dp.s);
    dd ct = dd_sqrt(dd(1.0) - s * s);
    dd cw = dd_sqrt(dd(1.0) - q * q);
    // delta_j = j cos(tau + j omega) = j (cos tau cos omega - j q s)
    dd delta = dd(double(j)) * (ct * cw - dd(double(j)) * q * s);
    return horner(d_coeffs_t<dd>(q, s), delta).to_double();
}

double d_delta_identity_rhs_dd(const DerivedParams& dp, int j) {
    dd q(dp.q), s(dp.s);
    dd ct = dd_sqrt(dd(1.0) - s * s);
    dd cw = dd_sqrt(dd(1.0) - q * q);
    dd c = ct * cw;
    dd sn = s * cw + dd(double(j)) * q * ct;  // sin(tau + j omega)
    dd sn2 = sn * sn;
    return (dd(-15.0 * j) * c * c * c * sn2 * sn2).to_double();
}

X0Result find_x0(const DerivedParams& dp) {
    X0Result res;
    double qs = dp.q * dp.s;
    double lo = -qs - (2.0 / 3.0) * dp.c;
    double hi = -qs;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    double flo = eval_D(dp, lo);
    double fhi = eval_D(dp, hi);
    if (fhi == 0.0) {  // alpha = beta makes D odd with the root at -qs = 0
        res.x0 = hi;
        res.theta = 0.0;
        return res;
    }
    if (!(flo > 0.0 && fhi < 0.0)) {
        // Expected signs failed; isolate a sign change over the full window.
        res.fallback = true;
        const int n = 4096;
        double w = dp.delta_plus - dp.delta_minus;
        double a = dp.delta_minus + 1e-9 * w;
        double b = dp.delta_plus - 1e-9 * w;
        double px = a, pf = eval_D(dp, a);
        bool found = false;
        for (int i = 1; i <= n; ++i) {
            double x = a + (b - a) * i / n;
            double f = eval_D(dp, x);
            if (pf == 0.0) {
                res.x0 = px;
                res.theta = (-qs - px) / dp.c;
                return res;
            }
            if ((pf > 0.0) != (f > 0.0)) {
                lo = px;
                hi = x;
                flo = pf;
                found = true;
                break;
            }
            px = x;
            pf = f;
        }
        if (!found) throw domain_error("no sign change of D found inside the window");
        res.bracket_lo = lo;
        res.bracket_hi = hi;
    }
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        double fm = eval_D(dp, mid);
        ++res.iterations;
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    res.x0 = 0.5 * (lo + hi);
    res.theta = (-qs - res.x0) / dp.c;
    return res;
}

double eval_S(const DerivedParams& dp, double x) {
    double B = eval_B(dp, x);
    if (!(B > 0.0)) throw domain_error("B(x) must be positive inside the window");
    ZPair zp = eval_Z_pair(dp, x);
    return zp.z * zp.z + zp.zprime * zp.zprime / B;
}

}  // namespace jb
