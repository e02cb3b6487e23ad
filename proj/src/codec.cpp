#include "codec.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rng.hpp"

namespace ssc {

Dictionary generate_dictionary(const CodeSpec& spec, const ChannelSpec& channel,
                               DictKind kind, uint64_t seed, uint64_t entry_cap) {
    const uint64_t total = uint64_t(spec.n) * uint64_t(spec.N);
    if (total > entry_cap)
        throw std::length_error("generate_dictionary: n*N = " + std::to_string(total) +
                                " exceeds cap " + std::to_string(entry_cap));

    Dictionary d;
    d.rows = spec.n;
    d.cols = spec.N;
    d.L = spec.L;
    d.M = spec.M;
    d.kind = kind;
    d.scale = std::sqrt(channel.P / double(spec.L));
    d.seed = seed;
    d.entries.resize(size_t(total));

    auto gen = make_stream(seed, /*stream=*/0x64696374ULL);
    if (kind == DictKind::bernoulli) {
        // one 64-bit draw feeds 64 signs
        uint64_t bits = 0;
        int avail = 0;
        for (auto& e : d.entries) {
            if (avail == 0) {
                bits = gen();
                avail = 64;
            }
            e = (bits & 1) ? d.scale : -d.scale;
            bits >>= 1;
            --avail;
        }
    } else {
        std::normal_distribution<double> nd(0.0, d.scale);
        for (auto& e : d.entries) e = nd(gen);
    }
    return d;
}

SectionMessage random_message(const CodeSpec& spec, uint64_t seed) {
    auto gen = make_stream(seed, /*stream=*/0x6d7367ULL);
    std::uniform_int_distribution<int32_t> pick(0, int32_t(spec.M) - 1);
    SectionMessage msg;
    msg.indices.resize(size_t(spec.L));
    for (auto& idx : msg.indices) idx = pick(gen);
    return msg;
}

std::vector<double> encode(const SectionMessage& msg, const Dictionary& dict) {
    if (int64_t(msg.indices.size()) != dict.L)
        throw std::domain_error("encode: message has wrong number of sections");
    std::vector<double> c(size_t(dict.rows), 0.0);
    for (int64_t sec = 0; sec < dict.L; ++sec) {
        const int32_t idx = msg.indices[size_t(sec)];
        if (idx < 0 || idx >= dict.M)
            throw std::domain_error("encode: section index out of range");
        const double* col = dict.column(sec * dict.M + idx);
        for (int64_t i = 0; i < dict.rows; ++i) c[size_t(i)] += col[i];
    }
    return c;
}

ReceivedWord awgn_channel(const std::vector<double>& c, double sigma2, uint64_t seed) {
    if (sigma2 < 0.0) throw std::domain_error("awgn_channel: sigma2 must be nonnegative");
    ReceivedWord out;
    out.y = c;
    if (sigma2 == 0.0) return out;
    auto gen = make_stream(seed, /*stream=*/0x6e6f697365ULL);
    std::normal_distribution<double> nd(0.0, std::sqrt(sigma2));
    for (auto& yi : out.y) yi += nd(gen);
    return out;
}

namespace {

uint64_t codebook_size_checked(const Dictionary& dict, uint64_t cap, const char* who) {
    // M^L with overflow guard
    uint64_t size = 1;
    for (int64_t s = 0; s < dict.L; ++s) {
        if (size > cap / uint64_t(dict.M) + 1)
            throw std::length_error(std::string(who) + ": M^L exceeds codebook cap " +
                                    std::to_string(cap));
        size *= uint64_t(dict.M);
    }
    if (size > cap)
        throw std::length_error(std::string(who) + ": M^L = " + std::to_string(size) +
                                " exceeds codebook cap " + std::to_string(cap));
    return size;
}

// Depth-first walk over section selections with a running partial sum.
// At the last section the residual of each of the M candidates is scored
// directly, so the inner loop touches each codeword once.
struct ExhaustiveSearch {
    const Dictionary& dict;
    const std::vector<double>& y;
    std::vector<double> residual_minus_partial; // y - (sum of chosen columns so far)
    std::vector<int32_t> current;
    std::vector<int32_t> best;
    double best_sq = 0.0;
    bool have_best = false;

    ExhaustiveSearch(const Dictionary& d, const std::vector<double>& yv)
        : dict(d), y(yv), residual_minus_partial(yv),
          current(size_t(d.L), 0), best(size_t(d.L), 0) {}

    void push_column(int64_t sec, int32_t idx, double sign) {
        const double* col = dict.column(sec * dict.M + idx);
        for (int64_t i = 0; i < dict.rows; ++i)
            residual_minus_partial[size_t(i)] += sign * col[i];
    }

    void walk(int64_t sec) {
        if (sec == dict.L - 1) {
            for (int32_t idx = 0; idx < dict.M; ++idx) {
                const double* col = dict.column(sec * dict.M + idx);
                double sq = 0.0;
                for (int64_t i = 0; i < dict.rows; ++i) {
                    const double r = residual_minus_partial[size_t(i)] - col[i];
                    sq += r * r;
                }
                if (!have_best || sq < best_sq) {
                    // strictly-less keeps the first (lexicographically
                    // smallest) minimizer on ties
                    have_best = true;
                    best_sq = sq;
                    current[size_t(sec)] = idx;
                    best = current;
                }
            }
            return;
        }
        for (int32_t idx = 0; idx < dict.M; ++idx) {
            current[size_t(sec)] = idx;
            push_column(sec, idx, -1.0);
            walk(sec + 1);
            push_column(sec, idx, +1.0);
        }
    }
};

} // namespace

DecodeResult least_squares_decode(const Dictionary& dict, const ReceivedWord& y,
                                  uint64_t codebook_cap) {
    if (int64_t(y.y.size()) != dict.rows)
        throw std::domain_error("least_squares_decode: received word length mismatch");
    codebook_size_checked(dict, codebook_cap, "least_squares_decode");

    ExhaustiveSearch search(dict, y.y);
    search.walk(0);
    return DecodeResult{SectionMessage{std::move(search.best)}, search.best_sq};
}

MistakeCount count_mistakes(const SectionMessage& decoded, const SectionMessage& truth) {
    if (decoded.indices.size() != truth.indices.size())
        throw std::domain_error("count_mistakes: section counts differ");
    int64_t l = 0;
    for (size_t i = 0; i < truth.indices.size(); ++i)
        if (decoded.indices[i] != truth.indices[i]) ++l;
    return MistakeCount{l, double(l) / double(truth.indices.size())};
}

double codeword_power(const std::vector<double>& c) {
    if (c.empty()) throw std::domain_error("codeword_power: empty codeword");
    double s = 0.0;
    for (double x : c) s += x * x;
    return s / double(c.size());
}

bool has_duplicate_codewords(const Dictionary& dict, uint64_t codebook_cap) {
    const uint64_t size = codebook_size_checked(dict, codebook_cap, "has_duplicate_codewords");

    // Only Bernoulli codewords live on a lattice where exact collisions can
    // occur; Gaussian collisions have probability zero.
    if (dict.kind != DictKind::bernoulli) return false;

    // Work in exact integer sign-sums (codeword coordinate = sum * scale).
    std::unordered_set<std::string> seen;
    seen.reserve(size_t(size) * 2);

    std::vector<int16_t> c(size_t(dict.rows), 0);
    std::vector<int32_t> idx(size_t(dict.L), 0);
    auto col_sign = [&](int64_t j, int64_t i) {
        return int16_t(dict.column(j)[i] > 0.0 ? 1 : -1);
    };
    for (int64_t sec = 0; sec < dict.L; ++sec)
        for (int64_t i = 0; i < dict.rows; ++i) c[size_t(i)] += col_sign(sec * dict.M, i);

    for (uint64_t count = 0;; ++count) {
        std::string key(reinterpret_cast<const char*>(c.data()),
                        c.size() * sizeof(int16_t));
        if (!seen.insert(std::move(key)).second) return true;
        if (count + 1 == size) break;
        // mixed-radix increment, swapping one column per changed digit
        for (int64_t sec = dict.L - 1; sec >= 0; --sec) {
            const int64_t base = sec * dict.M;
            const int32_t old = idx[size_t(sec)];
            const int32_t next = (old + 1) % int32_t(dict.M);
            for (int64_t i = 0; i < dict.rows; ++i)
                c[size_t(i)] += int16_t(col_sign(base + next, i) - col_sign(base + old, i));
            idx[size_t(sec)] = next;
            if (next != 0) break;
        }
    }
    return false;
}

} // namespace ssc
