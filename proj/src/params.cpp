#include "jb/params.hpp"

#include <cmath>

namespace jb {

void validate(const JacobiParams& p) {
    if (p.k < 0)
        throw domain_error("degree k must be >= 0, got " + std::to_string(p.k));
    if (p.k > kMaxDegree)
        throw domain_error("degree k exceeds supported maximum " + std::to_string(kMaxDegree));
    if (!(p.alpha > -1.0) || !(p.beta > -1.0))
        throw domain_error("alpha and beta must be > -1 (weight not integrable otherwise)");
    if (p.alpha > kMaxParam || p.beta > kMaxParam)
        throw domain_error("alpha/beta exceed supported maximum " + std::to_string(kMaxParam));
}

DerivedParams derive(const JacobiParams& p) {
    validate(p);
    DerivedParams dp;
    dp.k = p.k;
    dp.alpha = p.alpha;
    dp.beta = p.beta;
    dp.sigma = p.alpha + p.beta;
    dp.eta = p.alpha - p.beta;
    dp.r = 2.0 * p.k + dp.sigma + 1.0;
    dp.rho = dp.r - 1.0;
    dp.q = dp.eta / dp.r;
    dp.s = dp.sigma / dp.r;
    dp.omega = std::asin(dp.q);
    dp.tau = std::asin(dp.s);
    dp.cos_omega = std::cos(dp.omega);
    dp.cos_tau = std::cos(dp.tau);
    dp.c2 = (1.0 - dp.q * dp.q) * (1.0 - dp.s * dp.s);
    dp.c = std::sqrt(dp.c2);
    dp.sin_tau_prime = (dp.sigma + 1.0) / dp.r;
    // delta_j = j*cos(tau + j*omega); the trig form keeps the endpoints and
    // d(x) = (x - delta_-)(delta_+ - x) consistent to the last bit.
    dp.delta_plus = std::cos(dp.tau + dp.omega);
    dp.delta_minus = -std::cos(dp.tau - dp.omega);
    return dp;
}

}  // namespace jb
