#include "doctest.h"
#include "jb/lemmas.hpp"

using namespace jb;

namespace {
mpq_class frac(const char* s) { return mpq_class(s); }
}

TEST_CASE("exact values at qbar=1/2, sbar=1/4") {
    RationalPoint pt{mpq_class(1, 2), mpq_class(1, 4)};
    ProofPolyValues v = eval_proof_polys(pt);
    CHECK(v.q == mpq_class(3, 4));
    CHECK(v.s == mpq_class(15, 16));
    CHECK(v.c2 == frac("217/4096"));
    CHECK(v.v[0] == frac("9740655/2097152"));
    CHECK(v.v[1] == frac("5129595/524288"));
    CHECK(v.v[2] == frac("13010465/2097152"));
    CHECK(v.u[0] == frac("-625725/32768"));
    CHECK(v.u[1] == frac("-279585/8192"));
    CHECK(v.u[2] == frac("-453555/32768"));
    CHECK(v.w[0] == frac("9685512225/4294967296"));
    CHECK(v.w[1] == frac("18262379475/536870912"));
    CHECK(v.w[2] == frac("973692699725/34359738368"));
    CHECK(v.p1 == frac("5081/64"));
    CHECK(v.p2 == frac("16837/8"));
    CHECK(v.h == frac("78942489/4096"));
    CHECK(v.guard == frac("12209/4096"));
    BridgeValues bv = eval_bridge(v.q, v.s);
    CHECK(bv.p1 == frac("933381743/16777216"));
    CHECK(bv.p2 == frac("7540441/4096"));
    CHECK(bv.h == frac("6378316499217036339/281474976710656"));
    CHECK(check_sign_pattern(v).ok);
}

TEST_CASE("family structure and closed forms for w") {
    RationalPoint pt{mpq_class(1, 2), mpq_class(1, 4)};
    ProofPolyValues vals = eval_proof_polys(pt);
    CHECK(vals.v[3] == 0);
    CHECK(vals.v[4] == -vals.v[2]);
    CHECK(vals.v[5] == -vals.v[1]);
    CHECK(vals.v[6] == -vals.v[0]);
    CHECK(vals.u[3] == 0);
    CHECK(vals.u[4] == vals.u[2]);
    CHECK(vals.u[5] == vals.u[1]);
    CHECK(vals.u[6] == vals.u[0]);
    // w0 and w1 collapse to closed forms in q^2, s^2.
    mpq_class q2 = vals.q * vals.q, s2 = vals.s * vals.s;
    mpq_class diff = s2 - q2;
    mpq_class w0 = 225 * diff * diff * diff * diff;
    mpq_class w1 = 144 * diff * diff *
                   (8 * (1 - q2 * s2) * (2 - q2 - s2) + diff * diff);
    CHECK(vals.w[0] == w0);
    CHECK(vals.w[1] == w1);
}

TEST_CASE("degenerate edge is rejected by the sign check") {
    // qbar = 1 means q = 0: the u family vanishes and the pattern must fail.
    RationalPoint pt{mpq_class(1), mpq_class(1, 2)};
    ProofPolyValues vals = eval_proof_polys(pt);
    SignCheckResult sc = check_sign_pattern(vals);
    CHECK_FALSE(sc.ok);
    CHECK(sc.failure.find("u0") != std::string::npos);
}

TEST_CASE("sampler respects the open triangle") {
    std::vector<RationalPoint> pts = sample_points(500, 2024, 0.1);
    REQUIRE(pts.size() == 500);
    for (const RationalPoint& p : pts) {
        CHECK(p.sbar > 0);
        CHECK(p.sbar < p.qbar);
        CHECK(p.qbar < 1);
    }
    std::vector<RationalPoint> again = sample_points(500, 2024, 0.1);
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].qbar == again[i].qbar);
        CHECK(pts[i].sbar == again[i].sbar);
    }
}

TEST_CASE("full corner bias hugs a boundary edge") {
    std::vector<RationalPoint> pts = sample_points(300, 7, 1.0);
    mpq_class lim(1, 1000);
    for (const RationalPoint& p : pts) {
        bool near = p.sbar < lim || 1 - p.qbar < lim || p.qbar - p.sbar < lim;
        CHECK(near);
    }
}

TEST_CASE("sweep certifies the sign pattern") {
    LemmaSweepResult r = run_lemma_sweep(2000, 99, 0.1);
    CHECK(r.trials == 2000);
    CHECK(r.failures == 0);
    CHECK(r.failure_notes.empty());
}

TEST_CASE("float cross-check of the transformed polynomial") {
    CHECK(mobius_cross_check(100, 31337) < 1e-9);
}
