#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rivetkey {

// Deterministic random stream. std::mt19937_64 gives a portable bit stream,
// but the standard distributions are implementation-defined, so every draw
// here is built directly from raw 64-bit outputs. Identical seeds therefore
// produce identical values on every platform and compiler.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Rejection-free modulo is fine for the
    // small n used here; bias is < n / 2^64.
    uint64_t uniform_index(uint64_t n) { return engine_() % n; }

    // Standard normal via Box-Muller. One value per call, cached pair.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// SplitMix64-style mixing for deriving independent child seeds from a
// parent seed and an index. Used so that sample k of a dataset does not
// depend on how many samples precede it.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b) {
    return mix_seed(mix_seed(seed, a), b);
}

}  // namespace rivetkey
