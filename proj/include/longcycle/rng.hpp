#pragma once

#include <cstdint>

// Deterministic random number generation.
//
// The project-wide generator is xoshiro256++ seeded through SplitMix64.
// Both algorithms are fixed here (public-domain reference constants), so a
// 64-bit seed reproduces the same draw sequence on every platform and build;
// no std:: distribution objects are used anywhere, draws are mapped from raw
// 64-bit outputs directly.

namespace longcycle {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0,1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound >= 1.  Rejection-free bias is
    // negligible for bound << 2^64 but we debias anyway for reproducible
    // correctness at any bound.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Seed for trial `index` of an experiment with master seed `master`.
// Two SplitMix64 finalizer rounds decorrelate nearby indices; the derivation
// is part of the reproducibility contract (documented in the README).
inline std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    std::uint64_t a = splitmix64_next(state);
    return splitmix64_next(state) ^ a;
}

} // namespace longcycle
