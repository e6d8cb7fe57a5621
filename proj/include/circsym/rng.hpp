#pragma once

#include <cmath>
#include <cstdint>

namespace circsym {

/// SplitMix64 (Steele, Lea & Flood 2014): a 64-bit Weyl counter pushed
/// through an avalanching permutation. Seedable, platform-independent and
/// byte-reproducible; every value of `seed` selects an independent stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1); never returns an endpoint.
    double next_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    /// Standard normal by Box-Muller on open uniforms (one variate per pair,
    /// keeping the stream layout independent of call parity).
    double next_normal() {
        const double u1 = next_open();
        const double u2 = next_open();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kBmTwoPi * u2);
    }

private:
    static constexpr double kBmTwoPi = 6.283185307179586476925287;
    std::uint64_t state_ = 0;
};

/// Stream splitting: a fixed avalanche of (base, word). Replicate r of
/// scenario s runs on derive_seed(derive_seed(master, hash(s)), r), so any
/// scenario subset reruns with identical draws.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t word) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (word + 0x632BE59BD9B4E019ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace circsym
