#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace rqi {

// 64-bit avalanche mix (the SplitMix64 finalizer):
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27;  z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
// A bijection on uint64, so distinct inputs always map to distinct outputs.
inline std::uint64_t avalanche(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Counter-based generator (SplitMix64). The k-th output is a pure function
// of the seed:
//
//   state_k = seed + (k+1) * 0x9E3779B97F4A7C15
//   out_k   = avalanche(state_k)
//
// Integer arithmetic only, so any language reproduces the stream bit for
// bit. Doubles are built from the top 53 bits: u = (out >> 11) * 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return avalanche(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe as a log() argument.
    double next_open_double() noexcept {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Box-Muller pair of independent standard normals:
    //   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2)
    // with u1 in (0,1] and u2 in [0,1). Consumes exactly two outputs.
    std::pair<double, double> next_normal_pair() noexcept {
        const double u1 = next_open_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    std::uint64_t state_;
};

// Seed for an independent replication stream. avalanche() is bijective and
// base ^ index is injective in index, so the map is collision-free over the
// full 64-bit index range for any fixed base.
inline std::uint64_t derive_replication_seed(std::uint64_t base_seed,
                                             std::uint64_t replication_index) noexcept {
    return avalanche(base_seed ^ replication_index);
}

} // namespace rqi
