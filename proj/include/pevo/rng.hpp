#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pevo/digest.hpp"

namespace pevo {

/// Counter-based generator (splitmix64 output function). Streams are derived
/// by name from a root seed, so any (purpose, generation, index) tuple maps to
/// the same sequence regardless of evaluation order or thread scheduling.
/// Platform-independent: no std distributions, only integer arithmetic.
class RngStream {
public:
    explicit RngStream(uint64_t key) : state_(key) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit mantissa.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling, unbiased. n must be >= 1.
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool bernoulli(double p) { return next_double() < p; }

private:
    uint64_t state_;
};

inline uint64_t derive_key(uint64_t seed, std::string_view label) {
    uint64_t z = seed ^ fnv1a64(label);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent substream named by an arbitrary label, e.g. "tournament/3/7/0".
inline RngStream substream(uint64_t seed, std::string_view label) {
    return RngStream(derive_key(seed, label));
}

/// Label helper: joins parts with '/'.
std::string stream_label(std::string_view purpose, int generation, int index);

}  // namespace pevo
