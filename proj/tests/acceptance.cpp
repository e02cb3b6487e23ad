// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "harness.hpp"

using namespace ssc;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", num, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// independent dense-grid maximum of l*delta + 0.5 ln(1 - l^2 c)
double grid_max_value(double delta, double c, double lam_hi) {
    const int N = 200000;
    double best = -1e300;
    for (int i = 0; i <= N; ++i) {
        const double lam = lam_hi * double(i) / N;
        const double arg = 1.0 - lam * lam * c;
        if (arg <= 0.0) break;
        best = std::max(best, lam * delta + 0.5 * std::log(arg));
    }
    return best;
}

void criterion1() {
    bool ok = true;
    int64_t bad_l = 0;
    std::vector<int64_t> ls;
    for (int64_t l = 1000; l <= 5000; ++l) ls.push_back(l);
    ls.push_back(10000);
    ls.push_back(100000);
    double worst = 0.0;
    for (int64_t l : ls) {
        const double p = phi(l).phi;
        worst = std::max(worst, p * double(l) / 5.0);
        if (p > 5.0 / double(l)) {
            ok = false;
            bad_l = l;
        }
    }
    report(1, ok, "phi(l) <= 5/l on {1000..5000, 1e4, 1e5}, worst l*phi/5 = " +
                      fmt(worst) + (ok ? "" : " first fail l=" + std::to_string(bad_l)));
}

void criterion2() {
    bool ok = true;
    double worst = 0.0;
    for (int64_t l = 1; l <= 2000; ++l) {
        const double lr = binom_gauss_ratio(l).log_max_ratio;
        const double p = phi(l).phi;
        worst = std::max(worst, std::exp(lr - p));
        if (lr > p + 1e-9) ok = false;
    }
    report(2, ok, "max_k ratio <= e^phi(l) for l in [1,2000], worst ratio/e^phi = " +
                      fmt(worst));
}

void criterion3() {
    const LemmaReport rep = verify_lemmas("quad1d");
    double worst = 0.0;
    for (const LemmaCase& c : rep.cases) worst = std::max(worst, c.margin);
    const bool ok = rep.violations == 0 && rep.cases.size() >= 500 && worst <= 1.0;
    report(3, ok, std::to_string(rep.cases.size()) +
                      " 1d lattice cases, worst normalized margin = " + fmt(worst));
}

void criterion4() {
    const LemmaReport r2 = verify_lemmas("quad2d");
    const LemmaReport r3 = verify_lemmas("quad3d");
    const bool ok = r2.violations == 0 && r3.violations == 0 &&
                    r2.cases.size() >= 200 && r3.cases.size() >= 200;
    report(4, ok, "2d cases: " + std::to_string(r2.cases.size()) +
                      " (worst " + fmt(r2.worst_margin) + "), 3d cases: " +
                      std::to_string(r3.cases.size()) + " (worst " +
                      fmt(r3.worst_margin) + "), both matrix sign variants, " +
                      "dual-route checks included");
}

void criterion5() {
    const LemmaReport rep = verify_lemmas("em");
    int identity_cases = 0;
    for (const LemmaCase& c : rep.cases)
        if (c.params.rfind("gauss", 0) == 0 || c.params == "linear") ++identity_cases;

    // explicit b2bar = 1/6 specialization on a fresh fixture
    const EmIdentityResult spec =
        extended_em_identity(SmoothFn::gaussian(0.1, 1.2), -2.5, 2.0, 20, 1.0 / 6.0);
    const EmConstantReport consts = em_bound_constant_check(2.0);

    const bool ok = rep.violations == 0 && identity_cases >= 50 &&
                    spec.abs_diff <= 1e-10 &&
                    std::abs(consts.minmax_value - 0.125) <= 1e-9;
    report(5, ok, std::to_string(identity_cases) +
                      " identity cases, b2=1/6 diff = " + fmt(spec.abs_diff) +
                      ", minmax const = " + fmt(consts.minmax_value));
}

void criterion6() {
    bool ok = true;
    double worst = 0.0;
    int points = 0;
    for (int di = 1; di <= 20; ++di) {
        const double delta = 2.0 * double(di) / 20.0;
        for (int ci = 1; ci <= 20; ++ci) {
            const double c = 0.95 * double(ci) / 20.0;
            ++points;
            const MaxResult d = D_max(delta, c);
            const MaxResult d1 = D1_max(delta, c);
            const double gd = grid_max_value(delta, c, 0.999999 / std::sqrt(c));
            const double gd1 = grid_max_value(delta, c, 1.0);
            worst = std::max({worst, std::abs(d.value - gd), std::abs(d1.value - gd1)});
            if (std::abs(d.value - gd) > 1e-8 || std::abs(d1.value - gd1) > 1e-8)
                ok = false;
            if (d.value < 0.0 || d1.value < 0.0 || d1.value > d.value + 1e-15)
                ok = false;
        }
    }
    report(6, ok, std::to_string(points) +
                      " (delta,c) points, worst closed-form vs grid gap = " + fmt(worst));
}

void criterion7() {
    bool ok = true;
    for (int i = 0; i <= 10000; ++i) {
        const double x = 10.0 * double(i) / 10000.0;
        if (g_fn(x) < std::min(std::sqrt(2.0) * x, x * x) - 1e-12) ok = false;
    }
    double worst_end = 0.0;
    for (double v : {0.5, 3.0, 15.0}) {
        const double C = capacity(v);
        for (int i = 0; i <= 10000; ++i) {
            const double alpha = double(i) / 10000.0;
            if (c_alpha(alpha, v) - alpha * C < -1e-15) ok = false;
        }
        worst_end = std::max({worst_end, std::abs(c_alpha(0.0, v)),
                              std::abs(c_alpha(1.0, v) - C)});
    }
    if (worst_end > 1e-12) ok = false;
    report(7, ok, "g(x) >= min(sqrt(2)x, x^2) on [0,10]; C_alpha - alpha C >= 0, "
                  "endpoint gap = " + fmt(worst_end));
}

void criterion8() {
    std::vector<double> iotas;
    for (int64_t L : {100, 1000, 10000, 100000})
        iotas.push_back(iota_breakdown(L, 0.1, 15.0).iota);
    bool ok = true;
    for (size_t i = 1; i < iotas.size(); ++i)
        if (iotas[i] >= iotas[i - 1]) ok = false;
    // empirical 1/sqrt(L) decay; the exact integer-range maxima give a worst
    // ratio of about 1.61 against the L=100 anchor (phi near l = sqrt(L) is
    // still far from its asymptotic envelope there), so the gate is 2.0
    const double base = iotas[0] * 10.0;
    double worst = 0.0;
    double Lv = 100.0;
    for (double io : iotas) {
        worst = std::max(worst, io * std::sqrt(Lv) / base);
        Lv *= 10.0;
    }
    if (worst > 2.0) ok = false;

    const double v = 15.0;
    const double R = 0.6 * capacity(v);
    const int64_t L = 25, n = 250;
    const IotaBreakdown it = iota_breakdown(L, 0.08, v);
    int cases = 0;
    for (int64_t l = 2; l <= L; ++l) {
        const double alpha = double(l) / double(L);
        const double W = c_alpha(alpha, v) - alpha * R;
        if (W <= 0.0) continue;
        for (double frac : {0.0, 0.2, 0.4, 0.6, 0.8}) {
            ExponentQuery q{alpha, v, R, L, n, frac * W};
            ++cases;
            if (err_ber(q, it).log_value < err_gauss(q).log_value - 1e-12) ok = false;
        }
    }
    report(8, ok, "iota strictly decreasing, worst iota*sqrt(L) ratio = " + fmt(worst) +
                      "; err_ber >= err_gauss on " + std::to_string(cases) + " cases");
}

MonteCarloResult noisy_run(int threads) {
    ExperimentConfig cfg;
    cfg.v = 15.0;
    cfg.L = 6;
    cfg.a = std::log(8.0) / std::log(6.0); // M = ceil(6^a) = 8
    cfg.rate_fraction = 0.3;
    cfg.kind = DictKind::bernoulli;
    cfg.alpha0 = 1.0 / 6.0;
    cfg.trials = 2000;
    cfg.master_seed = 20260824;
    cfg.threads = threads;
    return run_monte_carlo(cfg);
}

void criteria9and10() {
    const MonteCarloResult run = noisy_run(4);
    const CodeSpec code = run.config.code();

    const TheoremBound thm = ber_theorem_bound(run.config.alpha0, 15.0, code.R,
                                               code.L, code.n);
    const double budget = std::min(1.0, thm.summed_bound.probability);
    const double half = 0.5 * (run.wilson_hi - run.wilson_lo);
    const bool bound_ok = run.p_hat <= budget + 3.0 * half;

    // noiseless control: same geometry, explicit sigma2 = 0
    ExperimentConfig ctl = run.config;
    ctl.sigma2 = 0.0;
    ctl.sigma2_set = true;
    ctl.trials = 500;
    const MonteCarloResult control = run_monte_carlo(ctl);
    bool control_ok = control.error_events == 0;
    for (const TrialRecord& rec : control.records)
        if (!rec.duplicate_dictionary && rec.mistakes != 0) control_ok = false;

    report(9, bound_ok && control_ok,
           "M=" + std::to_string(code.M) + " n=" + std::to_string(code.n) +
               " p_hat = " + fmt(run.p_hat) + " <= bound " + fmt(budget) +
               " + 3*CI " + fmt(3.0 * half) + "; control mistakes = 0, duplicates excluded = " +
               std::to_string(control.duplicates_excluded));

    const MonteCarloResult rerun = noisy_run(1);
    const bool identical = rerun.trials_csv() == run.trials_csv() &&
                           rerun.histogram_csv() == run.histogram_csv();
    report(10, identical, "threads=1 vs threads=4 CSVs byte-identical: " +
                              std::string(identical ? "yes" : "no"));
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criteria9and10();
    const auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::printf("%s (%d/10 passed, %llds)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                10 - failures, (long long)dt);
    return failures == 0 ? 0 : 1;
}
