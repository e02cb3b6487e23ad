#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codec.hpp"
#include "quadrature.hpp"

namespace ssc {

struct ExperimentConfig {
    double P = 1.0;
    double sigma2 = 0.0; // derived from v when v is given
    double v = 0.0;
    int64_t L = 0;
    int64_t M = 0;      // explicit section size, or derived from a
    double a = 0.0;     // section size rate
    double R = 0.0;     // nats; 0 means derived
    double rate_fraction = 0.0; // R = fraction * capacity
    int64_t n = 0;      // explicit code length, or derived
    DictKind kind = DictKind::bernoulli;
    double alpha0 = 0.0;
    int64_t trials = 1000;
    uint64_t master_seed = 1;
    uint64_t decode_cap = kDefaultDecodeCap;
    int threads = 0; // 0 = hardware concurrency

    // set when sigma2 came explicitly (allows the noiseless sigma2 = 0 control
    // while v still drives rate arithmetic)
    bool sigma2_set = false;

    static ExperimentConfig from_json(const std::string& text);
    std::string to_json() const;

    ChannelSpec channel() const;
    double noise_sigma2() const;
    CodeSpec code() const;
};

struct TrialRecord {
    int64_t trial;
    uint64_t seed;
    int64_t mistakes;
    double alpha; // section error rate
    double residual;
    double power; // realized codeword power
    bool duplicate_dictionary;
};

struct MonteCarloResult {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    std::vector<int64_t> histogram; // index l = mistakes count
    int64_t trials_counted;   // excludes duplicate-dictionary trials
    int64_t duplicates_excluded;
    int64_t error_events;     // mistakes >= alpha0 L among counted trials
    double p_hat;
    double wilson_lo, wilson_hi; // 95% CI

    std::string trials_csv() const;
    std::string histogram_csv() const;
    std::string summary_json() const;
};

MonteCarloResult run_monte_carlo(const ExperimentConfig& config);

struct PerLBoundRow {
    int64_t l;
    double alpha;
    double C_alpha;
    double t_star_gauss;
    double log_err_gauss;
    double err_gauss_prob;
    double t_star_ber;
    double log_err_ber;
    double err_ber_prob;
    bool no_slack;
};

struct BoundReport {
    double v, R, C, alpha0;
    int64_t L, n;
    double phi_L;
    IotaBreakdown iotas;
    TheoremBound gauss;
    TheoremBound ber;
    std::vector<PerLBoundRow> per_l;

    std::string to_json() const;
    std::string per_l_csv() const;
};

BoundReport compare_bounds(const ExperimentConfig& config);

struct LemmaCase {
    std::string suite;
    std::string params;
    double margin; // <= 1 (or <= 0 for difference-style checks) means pass
    bool ok;
};

struct LemmaReport {
    std::vector<LemmaCase> cases;
    int64_t violations = 0;
    double worst_margin = 0.0;
    std::string worst_params;

    std::string to_json() const;
};

/// Runs the invariant sweeps behind the discretization lemmas.  `suite` is
/// one of phi|quad1d|quad2d|quad3d|em|all.  `eta` is overridable so the
/// checker itself can be sanity-tested with a corrupted constant.
LemmaReport verify_lemmas(const std::string& suite, int64_t lmax = 2000,
                          double eta = kEta);

std::string phi_table_csv(int64_t lmin, int64_t lmax, int64_t step);
std::string iota_table_csv(const std::vector<int64_t>& L_values, double alpha0, double v);

struct WilsonInterval {
    double lo, hi;
};
WilsonInterval wilson_interval(int64_t successes, int64_t total, double z = 1.959963984540054);

} // namespace ssc
