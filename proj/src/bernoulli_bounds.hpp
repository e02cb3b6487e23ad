#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "exponents.hpp"

namespace ssc {

// eta = sqrt(9 / (8 pi e))
inline const double kEta = std::sqrt(9.0 / (8.0 * 3.14159265358979323846 *
                                            2.71828182845904523536));

enum class PhiBranch { small_zeta_series = 0, mid_term = 1, stirling_tail = 2 };

struct PhiResult {
    int64_t l;
    double zeta_star;
    double phi;
    PhiBranch branch;
};

struct IotaBreakdown {
    int64_t L;
    double alpha0;
    double v;
    double iota3, iota4, iota5;
    double iota1, iota2;
    double iota; // max(iota1, iota2)
    bool iota4_range_empty;
};

/// Three-branch penalty function phi_zeta(l); c_zeta = 1/(1+2z)^2 + 1/(1-2z)^2.
double phi_zeta(int64_t l, double zeta);

/// phi(l) = inf over zeta in (0, 1/2) of phi_zeta(l), via coarse grid plus
/// golden-section refinement.  Memoized.
PhiResult phi(int64_t l);

struct RatioResult {
    double max_ratio;
    double log_max_ratio;
    int64_t argmax_k;
};

/// Exact max over k of binomial(l, 1/2) pmf over N(k | l/2, l/4) density.
RatioResult binom_gauss_ratio(int64_t l);

/// The iota_1..iota_5 stack with exact maxima over the integer l ranges.
IotaBreakdown iota_breakdown(int64_t L, double alpha0, double v);

/// Per-l error bound for the Bernoulli dictionary.
LogBound err_ber(const ExponentQuery& q, const IotaBreakdown& iotas);

/// Theorem-level bound for the Bernoulli dictionary.
TheoremBound ber_theorem_bound(double alpha0, double v, double R, int64_t L, int64_t n);

using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// 2x2 matrix B from the exponent-proof decomposition.
Mat2 proof_matrix_B(double alpha, double v);

/// 3x3 matrix; the (2,2) entry sign is ambiguous in the source display, so
/// both variants are exposed (sign22 = +1 or -1).
Mat3 proof_matrix_Btilde(double alpha, double v, int sign22);

Mat2 assemble_A(const Mat2& B, double lambda);
Mat3 assemble_A(const Mat3& B, double lambda);

bool is_positive_definite(const Mat2& A);
bool is_positive_definite(const Mat3& A);

double det(const Mat2& A);
double det(const Mat3& A);

} // namespace ssc
