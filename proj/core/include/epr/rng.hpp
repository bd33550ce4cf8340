#pragma once

#include <cstdint>
#include <stdexcept>

namespace epr {

/// SplitMix64 generator (Steele, Lea & Flood; public-domain reference
/// constants). This is the single RNG used by every sampler in the
/// project: it is seedable, has a 64-bit state, and derived sub-streams
/// for parallel workers are produced by `stream_seed`. All golden values
/// in the test suite are recorded against this exact sequence.
///
/// next_u64:    state += 0x9E3779B97F4A7C15
///              z = state
///              z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///              z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///              return z ^ (z >> 31)
/// next_double: top 53 bits of next_u64, scaled to [0, 1)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Seed for worker `stream` derived from a base seed. Distinct streams
/// are decorrelated by running the base through one SplitMix64 step at
/// an offset proportional to the stream index.
inline std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream) {
    SplitMix64 g(base_seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
    return g.next_u64();
}

/// One Bernoulli draw: 1 with probability `bias`. Consumes exactly one
/// uniform draw; the comparison is strict, so bias 0 never fires and
/// bias 1 always does.
inline int sample_bernoulli(SplitMix64& rng, double bias) {
    if (!(bias >= 0.0 && bias <= 1.0))
        throw std::invalid_argument("sample_bernoulli: bias must be in [0, 1]");
    return rng.next_double() < bias ? 1 : 0;
}

/// Uniform draw on [0, 1).
inline double sample_uniform(SplitMix64& rng) {
    return rng.next_double();
}

} // namespace epr
