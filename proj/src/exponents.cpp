#include "exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ssc {

LogBound LogBound::from_log(double lv) {
    LogBound b;
    b.log_value = lv;
    b.vacuous = lv >= 0.0;
    b.probability = b.vacuous ? 1.0 : std::exp(lv);
    return b;
}

LogBound LogBound::vacuous_one() { return from_log(0.0); }

double g_fn(double x) {
    if (x < 0.0) throw std::domain_error("g_fn: x must be nonnegative");
    // sqrt(1+4x^2)-1 without cancellation for small x
    const double q = 4.0 * x * x;
    return q / (std::sqrt(1.0 + q) + 1.0);
}

double w_v_fn(double v) {
    if (!(v > 0.0)) throw std::domain_error("w_v_fn: v must be positive");
    const double onep = 1.0 + v;
    return v / (4.0 * onep * onep * std::sqrt(1.0 + 0.25 * v * v * v / onep));
}

double h_fn(double alpha, double delta, double v) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("h_fn: alpha must lie in (0,1]");
    if (delta < 0.0) throw std::domain_error("h_fn: delta must be nonnegative");
    return std::min(alpha * w_v_fn(v) * delta,
                    0.25 * g_fn(delta / (2.0 * std::sqrt(v))));
}

RhoTerms rho_terms(double alpha, double v) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("rho_terms: alpha must lie in [0,1]");
    if (!(v > 0.0)) throw std::domain_error("rho_terms: v must be positive");
    RhoTerms r;
    r.one_minus_rho1sq = alpha * (1.0 - alpha) * v / (1.0 + alpha * v);
    r.one_minus_rho2sq = alpha * alpha * v / (1.0 + alpha * alpha * v);
    return r;
}

MaxResult D_max(double delta, double c) {
    if (delta < 0.0) throw std::domain_error("D_max: delta must be nonnegative");
    if (!(c >= 0.0 && c < 1.0)) throw std::domain_error("D_max: need 0 <= c < 1");
    if (delta == 0.0) return MaxResult{0.0, 0.0};
    if (c == 0.0)
        throw std::domain_error("D_max: degenerate c=0, supremum infinite");
    // stationary point of lambda*delta + (1/2) ln(1 - lambda^2 c)
    const double lam = (-1.0 + std::sqrt(1.0 + 4.0 * delta * delta / c)) / (2.0 * delta);
    const double val = lam * delta + 0.5 * std::log1p(-lam * lam * c);
    return MaxResult{val, lam};
}

MaxResult D1_max(double delta, double c) {
    if (delta < 0.0) throw std::domain_error("D1_max: delta must be nonnegative");
    if (!(c >= 0.0 && c < 1.0)) throw std::domain_error("D1_max: need 0 <= c < 1");
    if (delta == 0.0) return MaxResult{0.0, 0.0};
    if (c == 0.0) return MaxResult{delta, 1.0};
    const double lam_unc = (-1.0 + std::sqrt(1.0 + 4.0 * delta * delta / c)) / (2.0 * delta);
    const double lam = std::min(lam_unc, 1.0);
    const double val = lam * delta + 0.5 * std::log1p(-lam * lam * c);
    return MaxResult{val, lam};
}

double log_binomial(int64_t L, int64_t k) {
    if (k < 0 || k > L) throw std::domain_error("log_binomial: k out of range");
    return std::lgamma(double(L) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(L - k) + 1.0);
}

double a_vL(double v, int64_t L, double R) {
    if (L < 3) throw std::domain_error("a_vL: L must be >= 3");
    if (!(R > 0.0)) throw std::domain_error("a_vL: R must be positive");
    const double C = capacity(v);
    double best = -std::numeric_limits<double>::infinity();
    for (int64_t k = 1; k < L; ++k) {
        const double alpha = double(k) / double(L);
        const double delta = c_alpha(alpha, v) - alpha * C;
        const double denom =
            D1_max(delta, rho_terms(alpha, v).one_minus_rho1sq).value *
            double(L) * std::log(double(L));
        if (!(denom > 0.0))
            throw std::runtime_error("a_vL: vanishing D1 at interior grid point");
        best = std::max(best, R * log_binomial(L, k) / denom);
    }
    return best;
}

namespace {

double logsumexp2(double a, double b) {
    const double m = std::max(a, b);
    if (m == -std::numeric_limits<double>::infinity()) return m;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double err_gauss_log(const ExponentQuery& q) {
    if (!(q.alpha > 0.0 && q.alpha <= 1.0))
        throw std::domain_error("err_gauss: alpha must lie in (0,1]");
    const double ca = c_alpha(q.alpha, q.v);
    const double delta_alpha = ca - q.alpha * q.R - q.t_alpha;
    if (delta_alpha < 0.0)
        throw std::domain_error("err_gauss: Delta_alpha negative (t_alpha too large)");
    const RhoTerms rho = rho_terms(q.alpha, q.v);
    const int64_t l = llround(q.alpha * double(q.L));
    const double term1 = log_binomial(q.L, l) -
                         double(q.n) * D1_max(delta_alpha, rho.one_minus_rho1sq).value;
    const double term2 = -double(q.n) * D_max(q.t_alpha, rho.one_minus_rho2sq).value;
    return logsumexp2(term1, term2);
}

} // namespace

LogBound err_gauss(const ExponentQuery& q) {
    return LogBound::from_log(err_gauss_log(q));
}

TMinResult minimize_over_t(double alpha, double v, double R, int64_t L, int64_t n,
                           const ErrFn& err_fn) {
    const double width = c_alpha(alpha, v) - alpha * R;
    if (width < 0.0) return TMinResult{0.0, LogBound::vacuous_one(), true};

    ExponentQuery q{alpha, v, R, L, n, 0.0};
    auto eval = [&](double t) {
        q.t_alpha = t;
        return err_fn(q).log_value;
    };

    if (width == 0.0) return TMinResult{0.0, LogBound::from_log(eval(0.0)), false};

    constexpr int kGrid = 1024;
    int best_i = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
        const double val = eval(width * double(i) / kGrid);
        if (val < best_val) {
            best_val = val;
            best_i = i;
        }
    }

    // golden-section refinement on the bracket around the best grid point
    double lo = width * double(std::max(0, best_i - 1)) / kGrid;
    double hi = width * double(std::min(kGrid, best_i + 1)) / kGrid;
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    while (hi - lo > width * 1e-9) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = eval(x2);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    double final_val = std::min(std::min(f1, f2), best_val);
    return TMinResult{t_star, LogBound::from_log(final_val), false};
}

LogBound sum_over_l(double alpha0, double v, double R, int64_t L, int64_t n,
                    const ErrFn& err_fn) {
    const auto l0 = std::max<int64_t>(1, int64_t(std::ceil(alpha0 * double(L) - 1e-12)));
    double acc = -std::numeric_limits<double>::infinity();
    for (int64_t l = l0; l <= L; ++l) {
        const TMinResult r = minimize_over_t(double(l) / double(L), v, R, L, n, err_fn);
        acc = logsumexp2(acc, std::min(r.bound.log_value, 0.0));
    }
    return LogBound::from_log(acc);
}

TheoremBound gauss_theorem_bound(double alpha0, double v, double R, int64_t L, int64_t n) {
    if (!(alpha0 > 0.0 && alpha0 <= 1.0))
        throw std::domain_error("gauss_theorem_bound: alpha0 must lie in (0,1]");
    const double C = capacity(v);
    if (R >= C) throw std::domain_error("gauss_theorem_bound: R must be less than capacity");
    TheoremBound tb;
    tb.exponent_lower = h_fn(alpha0, C - R, v) - std::log(2.0 * double(L)) / double(n);
    tb.prob_bound = LogBound::from_log(-double(n) * tb.exponent_lower);
    tb.summed_bound = sum_over_l(alpha0, v, R, L, n, err_gauss);
    return tb;
}

} // namespace ssc
