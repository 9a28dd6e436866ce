#include "jb/lemmas.hpp"

#include <cmath>

#include "jb/rng.hpp"
#include "jb/sonin.hpp"

namespace jb {

namespace {

mpq_class sq(const mpq_class& x) { return x * x; }

// p1, p2, h in the barred variables; h = 36 p1^2 - ab(1-a)(1-b) p2^2.
void p_polys(const mpq_class& a, const mpq_class& b, mpq_class& p1, mpq_class& p2,
             mpq_class& h) {
    mpq_class ab = a * b;
    p1 = 1223 * ab * (1 - a) * (1 - b) + 189 * sq(a - b) + ab * (93 - 88 * ab);
    p2 = 3942 * a + 3942 * b - 6815 * ab;
    h = 36 * sq(p1) - ab * (1 - a) * (1 - b) * sq(p2);
}

}  // namespace

ProofPolyValues eval_proof_polys(const RationalPoint& pt) {
    ProofPolyValues out;
    out.q = 1 - sq(pt.qbar);
    out.s = 1 - sq(pt.sbar);
    const mpq_class q2 = sq(out.q), s2 = sq(out.s);
    const mpq_class qs = out.q * out.s;
    out.c2 = (1 - q2) * (1 - s2);
    const mpq_class diff2 = sq(s2 - q2);

    out.v[0] = 15 * (diff2 + 8 * q2 * s2 * out.c2);
    out.v[1] = 12 * (4 * out.c2 * (q2 + s2 + 2 * q2 * s2) + 3 * diff2);
    out.v[2] = 27 * diff2 + 40 * out.c2 * (q2 + s2) + 8 * out.c2 * (1 + out.c2);
    out.v[3] = 0;
    out.v[4] = -out.v[2];
    out.v[5] = -out.v[1];
    out.v[6] = -out.v[0];

    out.u[0] = -60 * qs * (q2 + s2 - 2 * q2 * s2);
    out.u[1] = -96 * qs * (1 - q2 * s2);
    out.u[2] = -4 * qs * (16 - 7 * q2 - 7 * s2 - 2 * q2 * s2);
    out.u[3] = 0;
    out.u[4] = out.u[2];
    out.u[5] = out.u[1];
    out.u[6] = out.u[0];

    for (int i = 0; i < 3; ++i) out.w[i] = sq(out.v[i]) - out.c2 * sq(out.u[i]);

    p_polys(pt.qbar, pt.sbar, out.p1, out.p2, out.h);
    out.guard = 5 + q2 + s2 - 7 * q2 * s2;
    return out;
}

BridgeValues eval_bridge(const mpq_class& q, const mpq_class& s) {
    BridgeValues bv;
    p_polys(1 - sq(q), 1 - sq(s), bv.p1, bv.p2, bv.h);
    return bv;
}

SignCheckResult check_sign_pattern(const ProofPolyValues& vals) {
    SignCheckResult r;
    auto fail = [&](const std::string& what) {
        r.ok = false;
        if (!r.failure.empty()) r.failure += "; ";
        r.failure += what;
    };
    for (int i = 0; i < 3; ++i) {
        if (!(vals.v[i] > 0)) fail("v" + std::to_string(i) + " <= 0");
        if (!(vals.u[i] < 0)) fail("u" + std::to_string(i) + " >= 0");
        if (!(vals.w[i] > 0)) fail("w" + std::to_string(i) + " <= 0");
    }
    if (!(vals.p1 > 0)) fail("p1 <= 0");
    if (!(vals.p2 > 0)) fail("p2 <= 0");
    if (!(vals.h > 0)) fail("h <= 0");
    if (!(vals.guard > 0)) fail("guard <= 0");
    // Left bracket endpoint: D there equals (5/729) c2 c (6 p1' - qs c p2')
    // with p1', p2' taken at (1-q^2, 1-s^2), so p1' > 0 and
    // 36 p1'^2 > c2 q^2 s^2 p2'^2 pin its sign without touching sqrt.
    BridgeValues bv = eval_bridge(vals.q, vals.s);
    if (!(bv.p1 > 0)) fail("bridge p1 <= 0");
    if (!(bv.h > 0)) fail("bridge certificate h <= 0");
    return r;
}

std::vector<RationalPoint> sample_points(int n, std::uint64_t seed, double corner_bias) {
    Rng rng(seed);
    std::vector<RationalPoint> pts;
    pts.reserve(static_cast<size_t>(n));
    auto draw_unit = [&]() {
        unsigned long den = static_cast<unsigned long>(rng.uniform_int(2, 0xFFFFFFFFull));
        unsigned long num = static_cast<unsigned long>(rng.uniform_int(1, den - 1));
        mpq_class v(num, den);
        v.canonicalize();
        return v;
    };
    auto draw_tiny = [&]() {  // in (0, 1/1000), denominator still 32-bit
        unsigned long den = static_cast<unsigned long>(rng.uniform_int(2, 4000000));
        unsigned long num = static_cast<unsigned long>(rng.uniform_int(1, den - 1));
        mpq_class v(num, den * 1000);
        v.canonicalize();
        return v;
    };
    while (static_cast<int>(pts.size()) < n) {
        RationalPoint pt;
        if (rng.uniform() < corner_bias) {
            switch (rng.uniform_int(0, 2)) {
                case 0:  // hug sbar = 0
                    pt.sbar = draw_tiny();
                    do pt.qbar = draw_unit();
                    while (pt.qbar <= pt.sbar);
                    break;
                case 1:  // hug qbar = 1
                    pt.qbar = 1 - draw_tiny();
                    do pt.sbar = draw_unit();
                    while (pt.sbar >= pt.qbar);
                    break;
                default:  // hug sbar = qbar
                    pt.qbar = draw_unit();
                    pt.sbar = pt.qbar - draw_tiny();
                    if (pt.sbar <= 0) continue;
            }
        } else {
            pt.qbar = draw_unit();
            pt.sbar = draw_unit();
            if (pt.sbar == pt.qbar) continue;
            if (pt.sbar > pt.qbar) std::swap(pt.sbar, pt.qbar);
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

LemmaSweepResult run_lemma_sweep(int trials, std::uint64_t seed, double corner_bias) {
    LemmaSweepResult res;
    res.trials = trials;
    std::vector<RationalPoint> pts = sample_points(trials, seed, corner_bias);
    for (int i = 0; i < trials; ++i) {
        ProofPolyValues vals = eval_proof_polys(pts[static_cast<size_t>(i)]);
        SignCheckResult sc = check_sign_pattern(vals);
        if (!sc.ok) {
            ++res.failures;
            if (res.failure_notes.size() < 20) {
                res.failure_notes.push_back(
                    "point " + std::to_string(i) + " (qbar=" +
                    pts[static_cast<size_t>(i)].qbar.get_str() + ", sbar=" +
                    pts[static_cast<size_t>(i)].sbar.get_str() + "): " + sc.failure);
            }
        }
    }
    return res;
}

double mobius_cross_check(int n_points, std::uint64_t seed) {
    std::vector<RationalPoint> pts = sample_points(n_points, seed, 0.0);
    Rng rng(seed ^ 0xa5a5a5a55a5a5a5aull);
    double worst = 0.0;
    for (const RationalPoint& pt : pts) {
        ProofPolyValues vals = eval_proof_polys(pt);
        double q = vals.q.get_d(), s = vals.s.get_d();
        double c2 = (1.0 - q * q) * (1.0 - s * s);
        double c = std::sqrt(c2);
        double dm = -(c + q * s), dp = c - q * s;
        double t = 0.05 + 0.9 * rng.uniform();
        double x = (dm + dp * t) / (1.0 + t);
        std::array<double, 7> coef = d_poly_coeffs(q, s);
        double lhs = coef[6];
        for (int i = 5; i >= 0; --i) lhs = lhs * x + coef[i];
        lhs *= std::pow(1.0 + t, 6);
        double rhs = 0.0;
        for (int i = 6; i >= 0; --i)
            rhs = rhs * t + (vals.v[i].get_d() * c2 * c + c2 * c2 * vals.u[i].get_d());
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
    }
    return worst;
}

}  // namespace jb
