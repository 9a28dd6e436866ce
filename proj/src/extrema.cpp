#include "jb/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace jb {

namespace {

constexpr double kGold = 0.6180339887498949;  // (sqrt(5)-1)/2

MaxResult golden_refine(const std::function<double(double)>& f, double a, double b, double x_tol) {
    double x1 = b - kGold * (b - a);
    double x2 = a + kGold * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGold * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGold * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace

int default_grid_size(int k) { return 100 * (k + 1) + 1; }

LocalizationWindows localization_windows(const DerivedParams& dp) {
    if (dp.k < 1) throw domain_error("localization windows need k >= 1");
    double r23 = std::pow(dp.r, -2.0 / 3.0);
    double tau_p = std::asin(dp.sin_tau_prime);
    double cos_tau_p = std::cos(tau_p);
    LocalizationWindows w{};
    for (int j : {-1, 1}) {
        double sn = std::sin(dp.tau + j * dp.omega);
        double eps = std::cbrt(sn * sn * sn * sn / (2.0 * dp.cos_tau * dp.cos_omega)) * r23;
        double n = j * (std::cos(dp.tau + j * dp.omega) - (5.0 / 17.0) * eps);
        double snp = std::sin(tau_p + j * dp.omega);
        double epsp = std::cbrt(snp * snp * snp * snp / (2.0 * cos_tau_p * dp.cos_omega)) * r23;
        double np = j * (std::cos(tau_p + j * dp.omega) - (3.0 / 10.0) * epsp);
        if (j < 0) {
            w.n_minus = n;
            w.np_minus = np;
            w.eps_minus = eps;
            w.epsp_minus = epsp;
        } else {
            w.n_plus = n;
            w.np_plus = np;
            w.eps_plus = eps;
            w.epsp_plus = epsp;
        }
    }
    return w;
}

std::vector<MaxResult> find_local_maxima(const std::function<double(double)>& f, double lo,
                                         double hi, int n, double x_tol) {
    std::vector<MaxResult> out;
    if (n < 3 || !(hi > lo)) return out;
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        // cos runs pi -> 0 so samples ascend and include both endpoints
        xs[i] = mid - half * std::cos(std::numbers::pi * i / (n - 1));
        ys[i] = f(xs[i]);
    }
    xs.front() = lo;
    xs.back() = hi;
    for (int i = 1; i + 1 < n; ++i) {
        if (ys[i] > ys[i - 1] && ys[i] > ys[i + 1])
            out.push_back(golden_refine(f, xs[i - 1], xs[i + 1], x_tol));
    }
    // A max hugging an endpoint has no interior bracket; refine those too.
    if (n >= 2 && ys[0] > ys[1]) out.push_back(golden_refine(f, xs[0], xs[1], x_tol));
    if (n >= 2 && ys[n - 1] > ys[n - 2]) out.push_back(golden_refine(f, xs[n - 2], xs[n - 1], x_tol));
    std::sort(out.begin(), out.end(), [](const MaxResult& a, const MaxResult& b) { return a.x < b.x; });
    // Merge brackets that converged to the same peak.
    std::vector<MaxResult> merged;
    for (const MaxResult& m : out) {
        if (!merged.empty() && std::fabs(m.x - merged.back().x) < 64.0 * x_tol) {
            if (m.value > merged.back().value) merged.back() = m;
        } else {
            merged.push_back(m);
        }
    }
    return merged;
}

MaxResult global_max(const std::function<double(double)>& f, double lo, double hi, int n,
                     bool include_endpoints, double x_tol) {
    MaxResult best{lo, -std::numeric_limits<double>::infinity()};
    for (const MaxResult& m : find_local_maxima(f, lo, hi, n, x_tol))
        if (m.value > best.value) best = m;
    if (include_endpoints) {
        double fl = f(lo), fh = f(hi);
        if (fl > best.value) best = {lo, fl};
        if (fh > best.value) best = {hi, fh};
    }
    return best;
}

}  // namespace jb
