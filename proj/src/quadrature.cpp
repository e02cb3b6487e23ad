#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ssc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

} // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adaptive_step(f, a, fa, b, fb, m, fm, simpson(f, a, fa, b, fb, m, fm),
                         tol, 48);
}

LatticeSpec::LatticeSpec(int64_t n_) : n(n_), h(2.0 / std::sqrt(double(n_))) {
    if (n_ < 1) throw std::domain_error("LatticeSpec: n must be >= 1");
}

GaussSumResult discretized_gauss_1d(int64_t n, double mu, double s) {
    if (!(s > 0.0)) throw std::domain_error("discretized_gauss_1d: s must be positive");
    const LatticeSpec lat(n);
    double sum = 0.0;
    for (int64_t k = 0; k <= n; ++k) {
        const double d = lat.point(k) - mu;
        sum += std::exp(-0.5 * s * s * d * d);
    }
    GaussSumResult r;
    r.I_d = lat.h * sum;
    r.I_c = std::sqrt(2.0 * kPi) / s;
    r.ratio = r.I_d / r.I_c;
    r.bound_factor = 1.0 + kEta * s * s / double(n);
    r.bound_ok = r.I_d <= r.bound_factor * r.I_c;
    return r;
}

GaussSumResult discretized_gauss_2d(int64_t n, const Mat2& A) {
    if (!is_positive_definite(A))
        throw std::domain_error("discretized_gauss_2d: A must be strictly positive definite");
    const LatticeSpec lat(n);
    const double dA = det(A);
    // integrate x2 analytically: inner integral sqrt(2 pi / A22) * exp(-q x1^2/2)
    const double q = dA / A[1][1];
    double sum = 0.0;
    for (int64_t k = 0; k <= n; ++k) {
        const double x1 = lat.point(k);
        sum += std::exp(-0.5 * q * x1 * x1);
    }
    GaussSumResult r;
    r.I_d = lat.h * std::sqrt(2.0 * kPi / A[1][1]) * sum;
    r.I_c = 2.0 * kPi / std::sqrt(dA);
    r.ratio = r.I_d / r.I_c;
    r.bound_factor = 1.0 + kEta * A[0][0] / double(n);
    r.bound_ok = r.I_d <= r.bound_factor * r.I_c;
    return r;
}

GaussSumResult discretized_gauss_3d(int64_t n, int64_t n_prime, const Mat3& A) {
    if (!is_positive_definite(A))
        throw std::domain_error("discretized_gauss_3d: A must be strictly positive definite");
    const LatticeSpec lat1(n), lat2(n_prime);
    const double a33 = A[2][2];
    // marginalize x3: quadratic form on (x1,x2) left behind
    const double q11 = A[0][0] - A[0][2] * A[0][2] / a33;
    const double q12 = A[0][1] - A[0][2] * A[1][2] / a33;
    const double q22 = A[1][1] - A[1][2] * A[1][2] / a33;
    double sum = 0.0;
    for (int64_t k1 = 0; k1 <= n; ++k1) {
        const double x1 = lat1.point(k1);
        for (int64_t k2 = 0; k2 <= n_prime; ++k2) {
            const double x2 = lat2.point(k2);
            sum += std::exp(-0.5 * (q11 * x1 * x1 + 2.0 * q12 * x1 * x2 + q22 * x2 * x2));
        }
    }
    GaussSumResult r;
    r.I_d = lat1.h * lat2.h * std::sqrt(2.0 * kPi / a33) * sum;
    r.I_c = std::pow(2.0 * kPi, 1.5) / std::sqrt(det(A));
    r.ratio = r.I_d / r.I_c;
    r.bound_factor = (1.0 + kEta * A[0][0] / double(n)) *
                     (1.0 + kEta * A[1][1] / double(n_prime));
    r.bound_ok = r.I_d <= r.bound_factor * r.I_c;
    return r;
}

double discretized_gauss_2d_numeric(int64_t n, const Mat2& A) {
    if (!is_positive_definite(A))
        throw std::domain_error("discretized_gauss_2d_numeric: A must be positive definite");
    const LatticeSpec lat(n);
    const double sd2 = 1.0 / std::sqrt(A[1][1]);
    double total = 0.0;
    for (int64_t k = 0; k <= n; ++k) {
        const double x1 = lat.point(k);
        const double center = -A[0][1] * x1 / A[1][1];
        auto integrand = [&](double x2) {
            const double q = A[0][0] * x1 * x1 + 2.0 * A[0][1] * x1 * x2 +
                             A[1][1] * x2 * x2;
            return std::exp(-0.5 * q);
        };
        total += adaptive_quad(integrand, center - 40.0 * sd2, center + 40.0 * sd2, 1e-14);
    }
    return lat.h * total;
}

double discretized_gauss_3d_numeric(int64_t n, int64_t n_prime, const Mat3& A) {
    if (!is_positive_definite(A))
        throw std::domain_error("discretized_gauss_3d_numeric: A must be positive definite");
    const LatticeSpec lat1(n), lat2(n_prime);
    const double sd3 = 1.0 / std::sqrt(A[2][2]);
    double total = 0.0;
    for (int64_t k1 = 0; k1 <= n; ++k1) {
        const double x1 = lat1.point(k1);
        for (int64_t k2 = 0; k2 <= n_prime; ++k2) {
            const double x2 = lat2.point(k2);
            const double center = -(A[0][2] * x1 + A[1][2] * x2) / A[2][2];
            auto integrand = [&](double x3) {
                const double q = A[0][0] * x1 * x1 + A[1][1] * x2 * x2 +
                                 A[2][2] * x3 * x3 + 2.0 * A[0][1] * x1 * x2 +
                                 2.0 * A[0][2] * x1 * x3 + 2.0 * A[1][2] * x2 * x3;
                return std::exp(-0.5 * q);
            };
            total += adaptive_quad(integrand, center - 40.0 * sd3, center + 40.0 * sd3,
                                   1e-14);
        }
    }
    return lat1.h * lat2.h * total;
}

SmoothFn SmoothFn::gaussian(double mu, double s) {
    SmoothFn fn;
    fn.f = [mu, s](double x) {
        const double d = x - mu;
        return std::exp(-0.5 * s * s * d * d);
    };
    fn.f1 = [mu, s](double x) {
        const double d = x - mu;
        return -s * s * d * std::exp(-0.5 * s * s * d * d);
    };
    fn.f2 = [mu, s](double x) {
        const double d = x - mu;
        const double s2 = s * s;
        return s2 * (s2 * d * d - 1.0) * std::exp(-0.5 * s2 * d * d);
    };
    return fn;
}

SmoothFn SmoothFn::linear() {
    SmoothFn fn;
    fn.f = [](double x) { return x; };
    fn.f1 = [](double) { return 1.0; };
    fn.f2 = [](double) { return 0.0; };
    return fn;
}

EmIdentityResult extended_em_identity(const SmoothFn& fn, double a, double b,
                                      int64_t n, double b2bar) {
    if (!(b > a)) throw std::domain_error("extended_em_identity: need b > a");
    if (n < 0) throw std::domain_error("extended_em_identity: n must be >= 0");
    const double delta = (b - a) / double(n + 2);
    auto y = [&](int64_t k) { return a + double(k + 1) * delta; };

    double lattice = 0.5 * fn.f(a) + 0.5 * fn.f(b);
    for (int64_t k = 0; k <= n; ++k) lattice += fn.f(y(k));

    const double integral = adaptive_quad(fn.f, a, b, 1e-14);
    const double lhs = delta * lattice - integral;

    double residual_sum = 0.0;
    for (int64_t k = -1; k <= n; ++k) {
        const double yk = y(k);
        auto integrand = [&](double t) {
            const double u = t / delta;
            return (b2bar - u + u * u) * fn.f2(yk + t);
        };
        residual_sum += 0.5 * adaptive_quad(integrand, 0.0, delta, 1e-14);
    }
    const double rhs = 0.5 * b2bar * delta * delta * (fn.f1(b) - fn.f1(a)) -
                       delta * delta * residual_sum;
    return EmIdentityResult{lhs, rhs, std::abs(lhs - rhs)};
}

namespace {

// max over [0,1] of |x^2 - x + b|; extrema sit at x in {0, 1/2, 1}
double bernoulli_minmax_objective(double b) {
    const double at_end = std::abs(b);
    const double at_mid = std::abs(b - 0.25);
    return std::max(at_end, at_mid);
}

} // namespace

EmConstantReport em_bound_constant_check(double s) {
    EmConstantReport rep;
    rep.s_used = s;
    rep.eta = kEta;

    // golden-section over b2bar; the objective is convex piecewise linear
    double lo = -1.0, hi = 1.0;
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = bernoulli_minmax_objective(x1), f2 = bernoulli_minmax_objective(x2);
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = bernoulli_minmax_objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = bernoulli_minmax_objective(x2);
        }
    }
    rep.minmax_b2bar = 0.5 * (lo + hi);
    rep.minmax_value = bernoulli_minmax_objective(rep.minmax_b2bar);

    // max |f'| of the Gaussian family: scan then refine around the peak
    const SmoothFn fn = SmoothFn::gaussian(0.0, s);
    double best_x = 0.0, best = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = 5.0 / s * double(i) / 10000.0;
        const double val = std::abs(fn.f1(x));
        if (val > best) {
            best = val;
            best_x = x;
        }
    }
    double a2 = std::max(0.0, best_x - 5.0 / s / 10000.0);
    double b2 = best_x + 5.0 / s / 10000.0;
    double y1 = b2 - invphi * (b2 - a2), y2 = a2 + invphi * (b2 - a2);
    double g1 = std::abs(fn.f1(y1)), g2 = std::abs(fn.f1(y2));
    while (b2 - a2 > 1e-13) {
        if (g1 >= g2) {
            b2 = y2;
            y2 = y1;
            g2 = g1;
            y1 = b2 - invphi * (b2 - a2);
            g1 = std::abs(fn.f1(y1));
        } else {
            a2 = y1;
            y1 = y2;
            g1 = g2;
            y2 = a2 + invphi * (b2 - a2);
            g2 = std::abs(fn.f1(y2));
        }
    }
    rep.max_abs_fprime = std::max(std::max(g1, g2), best);
    return rep;
}

} // namespace ssc
