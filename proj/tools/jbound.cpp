// Command-line front end: point evaluation, window geometry, the comparison
// function, grid verification sweeps, exact lemma sweeps, and the plateau
// metrics.  Exit codes: 0 success, 1 verification failures, 2 usage or
// domain errors (including grids where no point satisfies the hypotheses).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jb/extrema.hpp"
#include "jb/jacobi.hpp"
#include "jb/lemmas.hpp"
#include "jb/osc.hpp"
#include "jb/sonin.hpp"
#include "jb/verifier.hpp"

namespace {

void say(const std::string& name, double v) {
    std::cout << name << " = " << jb::format_double_text(v) << "\n";
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    size_t colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, colon));
        hi = std::stoi(text.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return lo >= 0 && hi >= lo;
}

std::vector<double> parse_csv(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

int run_eval(const jb::JacobiParams& p, double x, const std::string& what) {
    if (what == "poly" || what == "ortho") {
        jb::EvalResult e =
            what == "poly" ? jb::eval_jacobi(p, x) : jb::eval_orthonormal(p, x);
        say("value", e.value());
        say("derivative", e.deriv());
        if (!std::isfinite(e.value())) {
            std::cout << "sign = " << e.value_sign << "\n";
            say("log_abs", e.value_log);
        }
    } else if (what == "M") {
        say("M", jb::eval_M(p, x));
    } else if (what == "Z") {
        say("Z", jb::eval_Z(jb::derive(p), x));
    } else if (what == "W") {
        jb::WValue w = jb::eval_W(p, x);
        say("W", w.raw);
        say("weighted", w.weighted);
    } else if (what == "S") {
        say("S", jb::eval_S(jb::derive(p), x));
    } else {
        std::cerr << "unknown --what: " << what << "\n";
        return 2;
    }
    return 0;
}

int run_window(const jb::JacobiParams& p) {
    jb::DerivedParams dp = jb::derive(p);
    jb::OscWindow ow = jb::osc_window(dp);
    jb::LocalizationWindows lw = jb::localization_windows(dp);
    jb::X0Result x0 = jb::find_x0(dp);
    say("delta_minus", dp.delta_minus);
    say("delta_plus", dp.delta_plus);
    say("gamma_minus", ow.gamma_minus);
    say("gamma_plus", ow.gamma_plus);
    say("N_minus", lw.n_minus);
    say("N_plus", lw.n_plus);
    say("Np_minus", lw.np_minus);
    say("Np_plus", lw.np_plus);
    say("x0", x0.x0);
    say("theta", x0.theta);
    return 0;
}

int run_sonin(const jb::JacobiParams& p) {
    jb::DerivedParams dp = jb::derive(p);
    jb::X0Result x0 = jb::find_x0(dp);
    say("x0", x0.x0);
    say("theta", x0.theta);
    say("bracket_lo", x0.bracket_lo);
    say("bracket_hi", x0.bracket_hi);
    std::cout << "fallback = " << (x0.fallback ? "true" : "false") << "\n";
    say("S_at_x0", jb::eval_S(dp, x0.x0));
    double w = dp.delta_plus - dp.delta_minus;
    jb::MaxResult m = jb::global_max(
        [&](double x) {
            double z = jb::eval_Z(dp, x);
            return z * z;
        },
        dp.delta_minus + 1e-9 * w, dp.delta_plus - 1e-9 * w, jb::default_grid_size(p.k));
    say("max_abs_Z", std::sqrt(m.value));
    say("argmax", m.x);
    return 0;
}

int run_conjecture(const jb::JacobiParams& p) {
    jb::ConjectureMetrics m = jb::conjecture_metrics(p);
    say("plateau_ratio", m.plateau_ratio);
    say("mass", m.mass);
    std::cout << "mass_converged = " << (m.mass_converged ? "true" : "false") << "\n";
    return 0;
}

int run_lemmas(int trials, std::uint64_t seed, double corner_bias) {
    jb::LemmaSweepResult res = jb::run_lemma_sweep(trials, seed, corner_bias);
    std::cout << "trials = " << res.trials << "\n";
    std::cout << "failures = " << res.failures << "\n";
    for (const std::string& note : res.failure_notes) std::cout << "  " << note << "\n";
    double mob = jb::mobius_cross_check(std::min(trials, 200), seed);
    say("mobius_cross_check_max_rel_err", mob);
    if (res.failures == 0 && mob < 1e-9) {
        std::cout << "all checks passed\n";
        return 0;
    }
    std::cout << "FAILED\n";
    return 1;
}

int run_verify(const std::string& check, const std::string& k_range,
               const std::string& alpha_set, const std::string& beta_set, int samples,
               std::uint64_t seed, const std::string& filter, const std::string& out_json,
               const std::string& out_csv) {
    int klo = 0, khi = 0;
    if (!parse_range(k_range, klo, khi)) {
        std::cerr << "bad --k-range, expected LO:HI with 0 <= LO <= HI\n";
        return 2;
    }
    jb::GridSpec grid;
    for (int k = klo; k <= khi; ++k) grid.k_values.push_back(k);
    grid.alpha_values = parse_csv(alpha_set);
    grid.beta_values = parse_csv(beta_set);
    grid.samples = samples;
    grid.seed = seed;
    grid.filter = filter;
    if (grid.alpha_values.empty() || grid.beta_values.empty()) {
        std::cerr << "empty --alpha-set or --beta-set\n";
        return 2;
    }

    jb::VerificationReport rep;
    if (check == "theorem1") {
        rep = jb::verify_theorem1(grid);
    } else if (check == "theorem2") {
        rep = jb::verify_theorem2(grid);
    } else if (check == "identities") {
        rep = jb::verify_identities(grid);
    } else if (check == "grmax") {
        rep = jb::verify_grmax(grid);
    } else {
        std::cerr << "unknown --check: " << check << "\n";
        return 2;
    }

    std::cout << jb::report_to_text(rep);
    if (!out_json.empty()) {
        std::ofstream f(out_json);
        if (!f) {
            std::cerr << "cannot write " << out_json << "\n";
            return 2;
        }
        f << jb::report_to_json(rep).dump(2);
    }
    if (!out_csv.empty()) {
        std::ofstream f(out_csv);
        if (!f) {
            std::cerr << "cannot write " << out_csv << "\n";
            return 2;
        }
        f << jb::report_to_csv(rep);
    }
    if (rep.summary.passed + rep.summary.failed == 0) {
        std::cerr << "no grid point satisfies the hypotheses of " << check << "\n";
        return 2;
    }
    return rep.summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound and identity verification for orthonormal Jacobi polynomials"};
    app.set_version_flag("--version", jb::kToolVersion);
    app.require_subcommand(1);

    int k = 0;
    double alpha = 0.0, beta = 0.0, x = 0.0;
    std::string what = "poly";

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
    eval->add_option("--k", k, "degree")->required();
    eval->add_option("--alpha", alpha)->required();
    eval->add_option("--beta", beta)->required();
    eval->add_option("--x", x, "evaluation point")->required();
    eval->add_option("--what", what, "poly|ortho|M|Z|W|S");

    CLI::App* window = app.add_subcommand("window", "window geometry for one parameter set");
    window->add_option("--k", k)->required();
    window->add_option("--alpha", alpha)->required();
    window->add_option("--beta", beta)->required();

    CLI::App* sonin = app.add_subcommand("sonin", "comparison-function summary");
    sonin->add_option("--k", k)->required();
    sonin->add_option("--alpha", alpha)->required();
    sonin->add_option("--beta", beta)->required();

    CLI::App* conj = app.add_subcommand("conjecture", "plateau ratio and window mass");
    conj->add_option("--k", k)->required();
    conj->add_option("--alpha", alpha)->required();
    conj->add_option("--beta", beta)->required();

    int trials = 1000;
    std::uint64_t seed = 0;
    double corner_bias = 0.1;
    CLI::App* lemmas = app.add_subcommand("lemmas", "exact rational sign sweep");
    lemmas->add_option("--trials", trials);
    lemmas->add_option("--seed", seed);
    lemmas->add_option("--corner-bias", corner_bias)->check(CLI::Range(0.0, 1.0));

    std::string check, k_range, alpha_set, beta_set, filter, out_json, out_csv;
    int samples = 1000;
    CLI::App* verify = app.add_subcommand("verify", "run a check over a parameter grid");
    verify->add_option("--check", check, "theorem1|theorem2|identities|grmax")->required();
    verify->add_option("--k-range", k_range, "LO:HI inclusive")->required();
    verify->add_option("--alpha-set", alpha_set, "comma-separated values")->required();
    verify->add_option("--beta-set", beta_set, "comma-separated values")->required();
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    verify->add_option("--filter", filter, "free-form note recorded in the report");
    verify->add_option("--out", out_json, "write the JSON report here");
    verify->add_option("--csv", out_csv, "write the CSV report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        jb::JacobiParams p{k, alpha, beta};
        if (eval->parsed()) return run_eval(p, x, what);
        if (window->parsed()) return run_window(p);
        if (sonin->parsed()) return run_sonin(p);
        if (conj->parsed()) return run_conjecture(p);
        if (lemmas->parsed()) return run_lemmas(trials, seed, corner_bias);
        if (verify->parsed())
            return run_verify(check, k_range, alpha_set, beta_set, samples, seed, filter,
                              out_json, out_csv);
    } catch (const jb::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
