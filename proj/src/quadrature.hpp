#pragma once

#include <cstdint>
#include <functional>

#include "bernoulli_bounds.hpp"

namespace ssc {

/// Symmetric lattice x_k = h (k - n/2), k = 0..n, h = 2/sqrt(n).
struct LatticeSpec {
    int64_t n;
    double h;

    explicit LatticeSpec(int64_t n_);
    double point(int64_t k) const { return h * (double(k) - double(n) / 2.0); }
};

struct GaussSumResult {
    double I_d;
    double I_c;
    double ratio;          // I_d / I_c
    double bound_factor;   // the (1 + eta .. / n) product
    bool bound_ok;         // I_d <= bound_factor * I_c
};

/// 1D discretized Gaussian sum vs its integral.
GaussSumResult discretized_gauss_1d(int64_t n, double mu, double s);

/// 2D: lattice on x1, closed-form integral over x2.
GaussSumResult discretized_gauss_2d(int64_t n, const Mat2& A);

/// 3D: lattices on x1 (n) and x2 (n_prime), closed-form integral over x3.
GaussSumResult discretized_gauss_3d(int64_t n, int64_t n_prime, const Mat3& A);

/// Same I_d computed with numeric inner quadrature instead of the
/// closed-form marginalization; used as the dual route in tests.
double discretized_gauss_2d_numeric(int64_t n, const Mat2& A);
double discretized_gauss_3d_numeric(int64_t n, int64_t n_prime, const Mat3& A);

/// C^2 function with analytic first and second derivatives.
struct SmoothFn {
    std::function<double(double)> f;
    std::function<double(double)> f1;
    std::function<double(double)> f2;

    static SmoothFn gaussian(double mu, double s); // exp(-s^2 (x-mu)^2 / 2)
    static SmoothFn linear();                      // f(x) = x
};

struct EmIdentityResult {
    double lhs; // trapezoid-corrected lattice sum minus integral of f
    double rhs; // b2bar delta^2 (f'(b)-f'(a))/2 - delta^2 sum of residuals
    double abs_diff;
};

/// Extended Euler-Maclaurin identity with a free b2bar; residual integrals
/// by adaptive quadrature to 1e-12.
EmIdentityResult extended_em_identity(const SmoothFn& fn, double a, double b,
                                      int64_t n, double b2bar);

struct EmConstantReport {
    double minmax_value;   // min over b2bar of max |x^2 - x + b2bar|, expect 1/8
    double minmax_b2bar;   // expect 1/8
    double max_abs_fprime; // for the Gaussian family at s: expect s/sqrt(e)
    double s_used;
    double eta;            // sqrt(9/(8 pi e))
};

/// Confirms the constants behind the 1D lattice bound.
EmConstantReport em_bound_constant_check(double s = 2.0);

/// Adaptive Simpson quadrature, absolute tolerance.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-12);

} // namespace ssc
