#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace neorl {

// All randomness flows through mt19937_64 plus the fixed-layout helpers
// below. std::uniform_*_distribution is implementation-defined, which would
// break bit-reproducibility of runs, so sampling is done by hand.
using Rng = std::mt19937_64;

// Derives an independent stream seed from a master seed and a label, so the
// environment and the policy draw from separate generators per run.
std::uint64_t mix_seed(std::uint64_t master, std::string_view label);

inline Rng make_stream(std::uint64_t master, std::string_view label) {
    return Rng(mix_seed(master, label));
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
    return lo + uniform_double(rng) * (hi - lo);
}

// Unbiased integer in [0, n) by rejection. n must be positive.
inline std::uint64_t uniform_int(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return r % n;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_double(rng) < p; }

}  // namespace neorl
