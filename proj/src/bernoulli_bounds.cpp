#include "bernoulli_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ssc {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct BranchValues {
    double b0, b1, b2; // the three max-terms
};

BranchValues phi_zeta_branches(int64_t l, double zeta) {
    const double dl = double(l);
    const double cz = 1.0 / ((1.0 + 2.0 * zeta) * (1.0 + 2.0 * zeta)) +
                      1.0 / ((1.0 - 2.0 * zeta) * (1.0 - 2.0 * zeta));
    BranchValues b;
    b.b0 = (3.0 / 16.0 * cz * cz + 1.0 / 12.0) / dl;
    b.b1 = -4.0 * zeta * zeta * zeta * zeta / 3.0 * dl + std::log(dl / 2.0) +
           1.0 / (12.0 * dl);
    b.b2 = -(std::log(2.0) - 0.5) * dl + 0.5 * std::log(kPi * dl / 2.0);
    return b;
}

} // namespace

double phi_zeta(int64_t l, double zeta) {
    if (l < 1) throw std::domain_error("phi_zeta: l must be >= 1");
    if (!(zeta > 0.0 && zeta < 0.5))
        throw std::domain_error("phi_zeta: zeta must lie in (0, 1/2)");
    const BranchValues b = phi_zeta_branches(l, zeta);
    return std::max({b.b0, b.b1, b.b2});
}

PhiResult phi(int64_t l) {
    if (l < 1) throw std::domain_error("phi: l must be >= 1");

    static std::unordered_map<int64_t, PhiResult> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }

    constexpr double lo_end = 0.001, hi_end = 0.499;
    constexpr int kGrid = 2048;
    auto eval = [l](double z) { return phi_zeta(l, z); };

    int best_i = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
        const double z = lo_end + (hi_end - lo_end) * double(i) / kGrid;
        const double val = eval(z);
        if (val < best_val) {
            best_val = val;
            best_i = i;
        }
    }

    double lo = lo_end + (hi_end - lo_end) * double(std::max(0, best_i - 1)) / kGrid;
    double hi = lo_end + (hi_end - lo_end) * double(std::min(kGrid, best_i + 1)) / kGrid;
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    while (hi - lo > 1e-10) {
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

    PhiResult r;
    r.l = l;
    r.zeta_star = 0.5 * (lo + hi);
    r.phi = std::min(best_val, std::min(f1, f2));
    const BranchValues b = phi_zeta_branches(l, r.zeta_star);
    const double m = std::max({b.b0, b.b1, b.b2});
    r.branch = (m == b.b0)   ? PhiBranch::small_zeta_series
               : (m == b.b1) ? PhiBranch::mid_term
                             : PhiBranch::stirling_tail;

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(l, r);
    return r;
}

RatioResult binom_gauss_ratio(int64_t l) {
    if (l < 1 || l > 1000000)
        throw std::domain_error("binom_gauss_ratio: need 1 <= l <= 1e6");
    const double dl = double(l);
    const double var = dl / 4.0;
    double best = -std::numeric_limits<double>::infinity();
    int64_t best_k = 0;
    for (int64_t k = 0; k <= l; ++k) {
        const double dev = double(k) - dl / 2.0;
        const double log_pmf = log_binomial(l, k) - dl * std::log(2.0);
        const double log_gauss = -dev * dev / (2.0 * var) - 0.5 * std::log(2.0 * kPi * var);
        const double log_ratio = log_pmf - log_gauss;
        if (log_ratio > best) {
            best = log_ratio;
            best_k = k;
        }
    }
    return RatioResult{std::exp(best), best, best_k};
}

IotaBreakdown iota_breakdown(int64_t L, double alpha0, double v) {
    if (L < 2) throw std::domain_error("iota_breakdown: L must be >= 2");
    if (!(alpha0 > 0.0 && alpha0 <= 1.0))
        throw std::domain_error("iota_breakdown: alpha0 must lie in (0,1]");
    if (!(v > 0.0)) throw std::domain_error("iota_breakdown: v must be positive");

    const auto l0 = std::max<int64_t>(1, int64_t(std::ceil(alpha0 * double(L) - 1e-12)));
    const double sqrtL = std::sqrt(double(L));

    IotaBreakdown out;
    out.L = L;
    out.alpha0 = alpha0;
    out.v = v;

    // iota3: max over l0 <= l <= L of e^phi(l) (1 + eta (1+v)/l)
    double m3 = -std::numeric_limits<double>::infinity();
    for (int64_t l = l0; l <= L; ++l)
        m3 = std::max(m3, std::exp(phi(l).phi) * (1.0 + kEta * (1.0 + v) / double(l)));
    out.iota3 = m3 - 1.0;

    // iota4: max over l0 <= l <= floor(L - sqrt(L))
    const auto hi4 = int64_t(std::floor(double(L) - sqrtL + 1e-12));
    out.iota4_range_empty = l0 > hi4;
    if (out.iota4_range_empty) {
        out.iota4 = 0.0;
    } else {
        double m4 = -std::numeric_limits<double>::infinity();
        for (int64_t l = l0; l <= hi4; ++l) {
            const int64_t lp = L - l;
            m4 = std::max(m4, std::exp(phi(l).phi + phi(lp).phi) *
                                  (1.0 + kEta / double(l)) * (1.0 + kEta / double(lp)));
        }
        out.iota4 = m4 - 1.0;
    }

    // iota5: max over ceil(L - sqrt(L)) <= l <= L-1
    const auto lo5 = std::max<int64_t>(1, int64_t(std::ceil(double(L) - sqrtL - 1e-12)));
    const double denom5 = std::sqrt(1.0 - 1.0 / sqrtL);
    double m5 = -std::numeric_limits<double>::infinity();
    for (int64_t l = lo5; l <= L - 1; ++l)
        m5 = std::max(m5, std::exp(phi(l).phi) / denom5 * (1.0 + kEta / double(l)));
    out.iota5 = m5 - 1.0;

    out.iota1 = std::log((1.0 + out.iota3) * (1.0 + std::max(out.iota4, out.iota5)));
    out.iota2 = phi(L).phi + std::log1p(2.0 * kEta / double(L));
    out.iota = std::max(out.iota1, out.iota2);
    return out;
}

LogBound err_ber(const ExponentQuery& q, const IotaBreakdown& iotas) {
    if (!(q.alpha > 0.0 && q.alpha <= 1.0))
        throw std::domain_error("err_ber: alpha must lie in (0,1]");
    const double ca = c_alpha(q.alpha, q.v);
    const double delta_alpha = ca - q.alpha * q.R - q.t_alpha;
    if (delta_alpha < 0.0)
        throw std::domain_error("err_ber: Delta_alpha negative (t_alpha too large)");
    const RhoTerms rho = rho_terms(q.alpha, q.v);
    const int64_t l = llround(q.alpha * double(q.L));
    const double term1 =
        log_binomial(q.L, l) -
        double(q.n) * (D1_max(delta_alpha, rho.one_minus_rho1sq).value - iotas.iota1);
    const double term2 =
        -double(q.n) * (D_max(q.t_alpha, rho.one_minus_rho2sq).value - iotas.iota2);
    const double m = std::max(term1, term2);
    return LogBound::from_log(m + std::log(std::exp(term1 - m) + std::exp(term2 - m)));
}

TheoremBound ber_theorem_bound(double alpha0, double v, double R, int64_t L, int64_t n) {
    if (!(alpha0 > 0.0 && alpha0 <= 1.0))
        throw std::domain_error("ber_theorem_bound: alpha0 must lie in (0,1]");
    const double C = capacity(v);
    if (R >= C) throw std::domain_error("ber_theorem_bound: R must be less than capacity");
    const IotaBreakdown iotas = iota_breakdown(L, alpha0, v);
    TheoremBound tb;
    tb.exponent_lower =
        h_fn(alpha0, C - R, v) - std::log(2.0 * double(L)) / double(n) - iotas.iota;
    tb.prob_bound = LogBound::from_log(-double(n) * tb.exponent_lower);
    tb.summed_bound = sum_over_l(alpha0, v, R, L, n, [&iotas](const ExponentQuery& q) {
        return err_ber(q, iotas);
    });
    return tb;
}

Mat2 proof_matrix_B(double alpha, double v) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("proof_matrix_B: alpha must lie in (0,1)");
    if (!(v > 0.0)) throw std::domain_error("proof_matrix_B: v must be positive");
    const double c = rho_terms(alpha, v).one_minus_rho2sq;
    const double u = 1.0 / (alpha * std::sqrt(v));
    return Mat2{{{-c, c * u}, {c * u, c}}};
}

Mat3 proof_matrix_Btilde(double alpha, double v, int sign22) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("proof_matrix_Btilde: alpha must lie in (0,1)");
    if (!(v > 0.0)) throw std::domain_error("proof_matrix_Btilde: v must be positive");
    if (sign22 != 1 && sign22 != -1)
        throw std::domain_error("proof_matrix_Btilde: sign22 must be +1 or -1");
    const double d1 = 1.0 + alpha * v;         // 1 + alpha v
    const double d2 = 1.0 + alpha * alpha * v; // 1 + alpha^2 v
    const double b11 = alpha * v / d1 - alpha * alpha * alpha * v / d2;
    const double b12 = -alpha * alpha * std::sqrt(alpha * (1.0 - alpha)) * v / d2;
    const double b13 = std::sqrt(alpha * v) / d1 - alpha * std::sqrt(alpha * v) / d2;
    const double b22 = double(sign22) * alpha * alpha * (1.0 - alpha) * v / d2;
    const double b23 = -alpha * std::sqrt((1.0 - alpha) * v) / d2;
    const double b33 = 1.0 / d1 - 1.0 / d2;
    return Mat3{{{b11, b12, b13}, {b12, b22, b23}, {b13, b23, b33}}};
}

Mat2 assemble_A(const Mat2& B, double lambda) {
    Mat2 A{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            A[i][j] = (i == j ? 1.0 : 0.0) - lambda * B[i][j];
    return A;
}

Mat3 assemble_A(const Mat3& B, double lambda) {
    Mat3 A{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            A[i][j] = (i == j ? 1.0 : 0.0) - lambda * B[i][j];
    return A;
}

double det(const Mat2& A) { return A[0][0] * A[1][1] - A[0][1] * A[1][0]; }

double det(const Mat3& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

bool is_positive_definite(const Mat2& A) {
    return A[0][0] > 0.0 && det(A) > 0.0;
}

bool is_positive_definite(const Mat3& A) {
    const double m1 = A[0][0];
    const double m2 = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    return m1 > 0.0 && m2 > 0.0 && det(A) > 0.0;
}

} // namespace ssc
