#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace vlc {

/// Counter-based seeding and a small explicit normal generator.
///
/// Sample streams are organized in fixed-size chunks; every chunk derives
/// its own generator state from (seed, stream, chunk index). Output is
/// therefore bit-identical no matter how chunks are distributed over
/// threads, and independent streams (e.g. the two noise terms of the
/// channel) never share state.
namespace rng {

constexpr std::size_t kChunk = 4096;

/// SplitMix64 step; also used to hash (seed, stream, chunk) into a state.
inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_state(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(s);
    s ^= chunk + 0x9e3779b97f4a7c15ULL;
    std::uint64_t c = splitmix64(s);
    return a ^ (b + (c << 1));
}

/// xoshiro-free minimal engine: SplitMix64 itself is a fine generator for
/// Monte-Carlo use and keeps the state to a single word.
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk)
        : state_(derive_state(seed, stream, chunk)) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (cosine branch only, so draws stay
    /// independent and positionally reproducible).
    double next_normal() {
        const double u1 = 1.0 - next_unit(); // (0, 1]
        const double u2 = next_unit();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

  private:
    std::uint64_t state_;
};

} // namespace rng
} // namespace vlc
