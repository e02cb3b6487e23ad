#pragma once

#include <cstdint>

namespace ssc {

/// AWGN channel description.  v is derived from P and sigma2 on
/// construction and never stored inconsistently.
struct ChannelSpec {
    double P;
    double sigma2;
    double v; // P / sigma2

    static ChannelSpec from_power(double P, double sigma2);
    static ChannelSpec from_snr(double P, double v);
};

/// Dimension and rate bookkeeping for one code.  All rates in nats.
struct CodeSpec {
    int64_t L;  // sections
    int64_t M;  // section size
    double a;   // section size rate, M = ceil(L^a)
    int64_t N;  // L * M columns
    double K;   // message bits, L * log2(M)
    double R;   // effective rate, nats/transmission
    int64_t n;  // code length
};

/// Channel capacity (1/2) ln(1+v), nats per transmission.
double capacity(double v);

/// Partial capacity (1/2) ln(1 + alpha v); equals capacity at alpha = 1.
double c_alpha(double alpha, double v);

inline double nats_to_bits(double nats) { return nats / 0.6931471805599453; }

/// Build a CodeSpec from (L, a, R).  M = ceil(L^a), n = round(a L ln L / R),
/// then R is recomputed from the realized (M, n) pair so downstream bounds
/// see the pair actually in use.
CodeSpec derive_code_spec(int64_t L, double a, double R);

/// Explicit-dimension variant used by the simulation harness.
CodeSpec make_code_spec(int64_t L, int64_t M, int64_t n);

} // namespace ssc
