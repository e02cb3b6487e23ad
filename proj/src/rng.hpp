#pragma once

#include <cstdint>
#include <random>

namespace ssc {

// Splittable seeding: a (master seed, stream id, substream id) triple is
// mixed through SplitMix64 into an independent mt19937_64 state.  Trials of
// a Monte Carlo run each get their own streams, so results do not depend on
// scheduling order.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(uint64_t master_seed, uint64_t stream_id,
                                   uint64_t substream_id = 0) {
    uint64_t s = splitmix64(master_seed);
    s = splitmix64(s ^ splitmix64(stream_id));
    s = splitmix64(s ^ splitmix64(substream_id));
    return std::mt19937_64(s);
}

} // namespace ssc
