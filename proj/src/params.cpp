#include "params.hpp"

#include <cmath>
#include <stdexcept>

namespace ssc {

ChannelSpec ChannelSpec::from_power(double P, double sigma2) {
    if (!(P > 0.0)) throw std::domain_error("ChannelSpec: P must be positive");
    if (!(sigma2 > 0.0)) throw std::domain_error("ChannelSpec: sigma2 must be positive");
    return ChannelSpec{P, sigma2, P / sigma2};
}

ChannelSpec ChannelSpec::from_snr(double P, double v) {
    if (!(P > 0.0)) throw std::domain_error("ChannelSpec: P must be positive");
    if (!(v > 0.0)) throw std::domain_error("ChannelSpec: v must be positive");
    return ChannelSpec{P, P / v, v};
}

double capacity(double v) {
    if (!(v > 0.0)) throw std::domain_error("capacity: v must be positive");
    return 0.5 * std::log1p(v);
}

double c_alpha(double alpha, double v) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("c_alpha: alpha must lie in [0,1]");
    if (!(v > 0.0)) throw std::domain_error("c_alpha: v must be positive");
    return 0.5 * std::log1p(alpha * v);
}

CodeSpec derive_code_spec(int64_t L, double a, double R) {
    if (L < 2) throw std::domain_error("derive_code_spec: L must be >= 2");
    if (!(a > 0.0)) throw std::domain_error("derive_code_spec: a must be positive");
    if (!(R > 0.0)) throw std::domain_error("derive_code_spec: R must be positive");

    const auto M = static_cast<int64_t>(std::ceil(std::pow(double(L), a)));
    const auto n = static_cast<int64_t>(std::llround(a * double(L) * std::log(double(L)) / R));
    if (n < 1) throw std::domain_error("derive_code_spec: derived code length is zero");

    CodeSpec spec;
    spec.L = L;
    spec.M = M;
    spec.a = a;
    spec.N = L * M;
    spec.K = double(L) * std::log2(double(M));
    spec.n = n;
    spec.R = double(L) * std::log(double(M)) / double(n); // realized rate, nats
    return spec;
}

CodeSpec make_code_spec(int64_t L, int64_t M, int64_t n) {
    if (L < 1 || M < 2 || n < 1)
        throw std::domain_error("make_code_spec: need L >= 1, M >= 2, n >= 1");
    CodeSpec spec;
    spec.L = L;
    spec.M = M;
    spec.a = std::log(double(M)) / std::log(double(L > 1 ? L : 2));
    spec.N = L * M;
    spec.K = double(L) * std::log2(double(M));
    spec.n = n;
    spec.R = double(L) * std::log(double(M)) / double(n);
    return spec;
}

} // namespace ssc
