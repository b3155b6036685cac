#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace qikm {

// Seeded randomness used by initialization and the bench runner. The standard
// <random> distributions are implementation-defined, so draws go through these
// helpers to keep results identical across standard libraries.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection sampling.
inline size_t uniform_index(std::mt19937_64& gen, size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t draw;
    do {
        draw = gen();
    } while (draw >= limit);
    return static_cast<size_t>(draw % n);
}

/// Index drawn with probability proportional to weights[i]. Entries with zero
/// weight are never returned; total weight must be positive.
inline size_t weighted_index(std::mt19937_64& gen, std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("weighted_index: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("weighted_index: no positive weight");

    while (true) {
        double target = uniform_unit(gen) * total;
        double cum = 0.0;
        size_t last_positive = weights.size();
        for (size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0.0) continue;
            cum += weights[i];
            last_positive = i;
            if (target < cum) return i;
        }
        // target == total up to rounding: fall back to the last positive entry.
        if (last_positive < weights.size()) return last_positive;
    }
}

}  // namespace qikm
