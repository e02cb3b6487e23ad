#pragma once

#include <cstdint>
#include <vector>

#include "params.hpp"

namespace ssc {

enum class DictKind { bernoulli, gaussian };

/// n x N dictionary, column-major, immutable after construction.
struct Dictionary {
    int64_t rows = 0; // n
    int64_t cols = 0; // N = L * M
    int64_t L = 0;
    int64_t M = 0;
    DictKind kind = DictKind::bernoulli;
    double scale = 0.0; // sqrt(P/L)
    uint64_t seed = 0;
    std::vector<double> entries; // column-major, rows * cols

    double at(int64_t i, int64_t j) const { return entries[size_t(j * rows + i)]; }
    const double* column(int64_t j) const { return entries.data() + size_t(j * rows); }
};

/// The sparse coefficient vector as L section indices, each in [0, M).
struct SectionMessage {
    std::vector<int32_t> indices;
};

struct ReceivedWord {
    std::vector<double> y;
};

struct DecodeResult {
    SectionMessage message;
    double residual; // ||y - X beta||^2 at the minimizer
};

// default cap on M^L for the exhaustive decoder
inline constexpr uint64_t kDefaultDecodeCap = uint64_t(1) << 24;
// default cap on dictionary size n*N
inline constexpr uint64_t kDefaultDictCap = uint64_t(1) << 28;

Dictionary generate_dictionary(const CodeSpec& spec, const ChannelSpec& channel,
                               DictKind kind, uint64_t seed,
                               uint64_t entry_cap = kDefaultDictCap);

SectionMessage random_message(const CodeSpec& spec, uint64_t seed);

std::vector<double> encode(const SectionMessage& msg, const Dictionary& dict);

ReceivedWord awgn_channel(const std::vector<double>& c, double sigma2, uint64_t seed);

/// Exhaustive least squares decode over all M^L section selections.
/// Ties broken by lexicographically smallest index array.
DecodeResult least_squares_decode(const Dictionary& dict, const ReceivedWord& y,
                                  uint64_t codebook_cap = kDefaultDecodeCap);

struct MistakeCount {
    int64_t mistakes;
    double section_error_rate; // mistakes / L
};

MistakeCount count_mistakes(const SectionMessage& decoded, const SectionMessage& truth);

double codeword_power(const std::vector<double>& c);

/// Scans all M^L codewords for duplicates (the beta -> X beta map failing
/// to be injective).  Bernoulli dictionaries at tiny n can collide.
bool has_duplicate_codewords(const Dictionary& dict,
                             uint64_t codebook_cap = kDefaultDecodeCap);

} // namespace ssc
