// Exact sign certification of the proof polynomials, over rationals.
//
// Points are sampled as (qbar, sbar) with 0 < sbar < qbar <= 1 and mapped
// to q = 1 - qbar^2, s = 1 - sbar^2, so 0 <= q < s < 1 stays rational and
// every polynomial below evaluates exactly in mpq.  The Mobius-transformed
// sign polynomial has coefficient families v_i (positive), u_i (negative),
// w_i = v_i^2 - c2 u_i^2 (positive); p1, p2, h certify the sign of the
// degree-6 polynomial at the left bracket endpoint -qs - (2/3)c via
// h = 36 p1^2 - c2 q^2 s^2 p2^2 > 0, a pure rational comparison even
// though c itself is irrational.

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace jb {

struct RationalPoint {
    mpq_class qbar;  // (0, 1]
    mpq_class sbar;  // (0, 1), sbar < qbar
};

struct ProofPolyValues {
    mpq_class q, s;         // q = 1 - qbar^2, s = 1 - sbar^2
    mpq_class c2;           // (1 - q^2)(1 - s^2)
    std::array<mpq_class, 7> v;
    std::array<mpq_class, 7> u;
    std::array<mpq_class, 3> w;  // w_i = v_i^2 - c2 u_i^2, i = 0, 1, 2
    mpq_class p1, p2, h;         // evaluated at (qbar, sbar)
    mpq_class guard;             // 5 + q^2 + s^2 - 7 q^2 s^2
};

ProofPolyValues eval_proof_polys(const RationalPoint& pt);

// p1, p2, h with the arguments (1 - q^2, 1 - s^2); h > 0 together with
// p1 > 0 certifies that the sign polynomial is positive at the left
// bracket endpoint for this (q, s).
struct BridgeValues {
    mpq_class p1, p2, h;
};
BridgeValues eval_bridge(const mpq_class& q, const mpq_class& s);

struct SignCheckResult {
    bool ok = true;
    std::string failure;  // which sign claim broke, empty if none
};

// v_i > 0, u_i < 0 (i = 0, 1, 2), w_i > 0, p1 > 0, p2 > 0, h > 0,
// guard > 0, plus the bridge certificate at (1 - q^2, 1 - s^2).
SignCheckResult check_sign_pattern(const ProofPolyValues& vals);

// Seeded sampler: ratios of 32-bit integers, strictly inside the triangle
// 0 < sbar < qbar < 1; corner_bias of the draws land within 1/1000 of one
// of the three boundary edges.
std::vector<RationalPoint> sample_points(int n, std::uint64_t seed, double corner_bias = 0.1);

struct LemmaSweepResult {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;
};

LemmaSweepResult run_lemma_sweep(int trials, std::uint64_t seed, double corner_bias = 0.1);

// Float cross-check of the Mobius identity
//   D((delta_- + delta_+ t)/(1 + t)) (1+t)^6 = c2^{3/2} sum_i (v_i + sqrt(c2) u_i) t^i
// at sampled rational parameter points; returns the max relative error.
double mobius_cross_check(int n_points, std::uint64_t seed);

}  // namespace jb
