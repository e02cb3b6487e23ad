#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "params.hpp"

namespace ssc {

/// One (alpha, v, R, L, n, t_alpha) query against the per-l error bounds.
struct ExponentQuery {
    double alpha;   // in (0, 1]
    double v;       // SNR
    double R;       // rate, nats
    int64_t L;      // sections
    int64_t n;      // code length
    double t_alpha; // slack in [0, C_alpha - alpha R]
};

struct RhoTerms {
    double one_minus_rho1sq; // alpha (1-alpha) v / (1 + alpha v)
    double one_minus_rho2sq; // alpha^2 v / (1 + alpha^2 v)
};

struct MaxResult {
    double value;
    double lambda_star;
};

/// A bound value kept in log domain; `probability` is exp(log_value)
/// clipped to [0, 1] for reporting.
struct LogBound {
    double log_value;
    double probability;
    bool vacuous; // log_value >= 0

    static LogBound from_log(double lv);
    static LogBound vacuous_one();
};

struct TheoremBound {
    double exponent_lower;   // E(alpha0, R) lower bound
    LogBound prob_bound;     // exp(-n * exponent_lower), clipped
    LogBound summed_bound;   // sum over l >= alpha0 L of min_t err(l/L)
};

double g_fn(double x);
double w_v_fn(double v);
double h_fn(double alpha, double delta, double v);
RhoTerms rho_terms(double alpha, double v);

/// max over lambda >= 0 of lambda*delta + (1/2) ln(1 - lambda^2 c),
/// via the closed-form stationary point.
MaxResult D_max(double delta, double c);

/// Same objective with lambda clamped to [0, 1].
MaxResult D1_max(double delta, double c);

/// ln C(L, k) via lgamma.
double log_binomial(int64_t L, int64_t k);

/// Section size rate threshold, exact max over the (L-1)-point alpha grid.
double a_vL(double v, int64_t L, double R);

/// Per-l error bound for the Gaussian dictionary at a given t_alpha.
LogBound err_gauss(const ExponentQuery& q);

struct TMinResult {
    double t_star;
    LogBound bound;
    bool no_slack; // C_alpha <= alpha R: bound vacuous for this alpha
};

using ErrFn = std::function<LogBound(const ExponentQuery&)>;

/// Minimize err_fn over t_alpha in [0, C_alpha - alpha R]:
/// 1024-point grid then golden-section refinement.
TMinResult minimize_over_t(double alpha, double v, double R, int64_t L, int64_t n,
                           const ErrFn& err_fn);

/// Theorem-level bound for the Gaussian dictionary: exponent form plus the
/// per-l summed form.
TheoremBound gauss_theorem_bound(double alpha0, double v, double R, int64_t L, int64_t n);

/// Shared summation over l >= ceil(alpha0 L) of per-l t-minimized bounds.
LogBound sum_over_l(double alpha0, double v, double R, int64_t L, int64_t n,
                    const ErrFn& err_fn);

} // namespace ssc
