// Acceptance gate: eight criteria, one PASS/FAIL line each, exit 0 only if
// all hold.  Grids, seeds, and tolerances are pinned; a change in any
// reported number between runs on the same build is a bug.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <string>

#include "jb/lemmas.hpp"
#include "jb/verifier.hpp"

using namespace jb;

namespace {

int g_failures = 0;

void line(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %d %-24s %s  (%s)\n", idx, name, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

GridSpec make_grid(int klo, int khi, std::initializer_list<double> params) {
    GridSpec g;
    for (int k = klo; k <= khi; ++k) g.k_values.push_back(k);
    g.alpha_values = params;
    g.beta_values = params;
    g.seed = 20250816;
    return g;
}

}  // namespace

int main() {
    {
        Timer t;
        VerificationReport rep =
            verify_theorem1(make_grid(1, 40, {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 100.0}));
        double dt = t.secs();
        bool ok = rep.summary.failed == 0 && rep.summary.passed > 0 && dt < 120.0;
        line(1, "universal_bound", ok,
             fmt("passed=%d failed=%d skipped=%d min_margin=%.6g t=%.1fs",
                 rep.summary.passed, rep.summary.failed, rep.summary.skipped,
                 rep.summary.min_margin, dt));
    }

    const GridSpec heavy_grid = make_grid(6, 40, {0.61, 1.0, 2.0, 5.0, 10.0, 25.0, 100.0});
    {
        Timer t;
        VerificationReport rep = verify_theorem2(heavy_grid);
        double dt = t.secs();
        bool ok = rep.summary.failed == 0 && rep.summary.passed > 0 && dt < 120.0;
        line(2, "weighted_bound", ok,
             fmt("passed=%d failed=%d skipped=%d min_margin=%.6g t=%.1fs",
                 rep.summary.passed, rep.summary.failed, rep.summary.skipped,
                 rep.summary.min_margin, dt));
    }

    // One identities run feeds criteria 3 (exact identities) and 5 (envelopes).
    VerificationReport id_rep;
    {
        GridSpec g;
        g.k_values = {1, 50};
        g.alpha_values = {50.0};
        g.beta_values = {50.0};
        g.samples = 200;
        g.seed = 20250816;
        Timer t;
        id_rep = verify_identities(g);
        double dt = t.secs();
        int id_total = 0, id_fail = 0, env_total = 0, env_fail = 0;
        double env_margin = 1.0;
        for (const CheckItem& it : id_rep.items) {
            if (it.skipped) continue;
            if (it.check == "osc_envelope") {
                ++env_total;
                env_fail += it.pass ? 0 : 1;
                if (it.margin < env_margin) env_margin = it.margin;
            } else {
                ++id_total;
                id_fail += it.pass ? 0 : 1;
            }
        }
        line(3, "exact_identities", id_total > 0 && id_fail == 0,
             fmt("items=%d failed=%d t=%.1fs", id_total, id_fail, dt));

        Timer t4;
        VerificationReport sonin = verify_sonin_suite(200, 20250816);
        line(4, "comparison_function",
             sonin.summary.failed == 0 && sonin.summary.passed > 0,
             fmt("passed=%d failed=%d min_margin=%.6g t=%.1fs", sonin.summary.passed,
                 sonin.summary.failed, sonin.summary.min_margin, t4.secs()));

        line(5, "envelope_bounds", env_total > 0 && env_fail == 0,
             fmt("windows=%d failed=%d min_margin=%.6g", env_total, env_fail, env_margin));
    }

    {
        Timer t;
        VerificationReport rep = verify_grmax(heavy_grid);
        bool ok = rep.summary.failed == 0 && rep.summary.passed > 0;
        line(6, "extremum_localization", ok,
             fmt("passed=%d failed=%d skipped=%d min_margin=%.6g t=%.1fs",
                 rep.summary.passed, rep.summary.failed, rep.summary.skipped,
                 rep.summary.min_margin, t.secs()));
    }

    {
        Timer t;
        LemmaSweepResult sweep = run_lemma_sweep(10000, 20250816, 0.1);
        double mob = mobius_cross_check(500, 20250816);
        double dt = t.secs();
        bool ok = sweep.trials == 10000 && sweep.failures == 0 && mob < 1e-9 && dt < 60.0;
        line(7, "rational_sign_certificates", ok,
             fmt("trials=%d failures=%d mobius_err=%.3g t=%.1fs", sweep.trials,
                 sweep.failures, mob, dt));
        for (const std::string& note : sweep.failure_notes)
            std::printf("    %s\n", note.c_str());
    }

    {
        struct Set {
            int k;
            double a, b;
            bool floor;  // require mass >= 0.95
        };
        const Set sets[] = {
            {50, 0.0, 0.0, true},    {50, 20.0, 5.0, true},  {50, 20.0, 20.0, true},
            {100, 10.0, 10.0, true}, {200, 0.0, 0.0, true},  {64, 5.0, 0.5, true},
            {20, 100.0, 100.0, false}, {6, 50.0, 0.61, false}, {120, 50.0, 30.0, false},
        };
        Timer t;
        ConjectureMetrics leg = conjecture_metrics({200, 0.0, 0.0});
        bool ok = leg.plateau_ratio > 0.97 && leg.plateau_ratio < 1.03;
        double mass_lo = 1.0, mass_hi = 0.0;
        for (const Set& s : sets) {
            ConjectureMetrics m = conjecture_metrics({s.k, s.a, s.b});
            if (!m.mass_converged || m.mass > 1.0 + 1e-8) ok = false;
            if (s.floor && m.mass < 0.95) ok = false;
            if (m.mass < mass_lo) mass_lo = m.mass;
            if (m.mass > mass_hi) mass_hi = m.mass;
        }
        line(8, "plateau_and_mass", ok,
             fmt("plateau_ratio=%.9g mass=[%.6g, %.6g] t=%.1fs", leg.plateau_ratio,
                 mass_lo, mass_hi, t.secs()));
    }

    if (g_failures) std::printf("ACCEPTANCE: %d criteria failed\n", g_failures);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return g_failures ? 1 : 0;
}
