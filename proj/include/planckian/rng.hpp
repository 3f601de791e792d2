// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace planckian {

// SplitMix64 finalizer, used for seed mixing and stream derivation.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard, and uniform doubles are produced from
// the raw 64-bit output directly (std::uniform_real_distribution is
// implementation-defined and therefore avoided). Given the same seed, every
// draw sequence is bit-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    // Independent stream for a work item; identical (root_seed, stream) pairs
    // always yield identical streams regardless of worker count.
    static Rng derive(std::uint64_t root_seed, std::uint64_t stream) {
        return Rng(mix64(root_seed) ^ mix64(stream * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace planckian
