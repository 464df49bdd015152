#pragma once

#include <cstdint>

namespace aoi {

// splitmix64: seeds the main generator; every stream derives its state from
// four consecutive outputs.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ 1.0 (Blackman & Vigna), public-domain reference algorithm.
// Integer-only state transitions give bit-identical sequences on every
// platform, which the deterministic-output guarantees rely on.
class Xoshiro256pp {
  public:
    Xoshiro256pp() : s_{1, 0, 0, 0} {}

    // Independent stream for (seed, stream_index): sensor i uses index i,
    // auxiliary draws (RTA TDMA position) use index n_sensors.
    static Xoshiro256pp stream(std::uint64_t seed, std::uint64_t stream_index) {
        SplitMix64 sm{seed ^ (0x9E3779B97F4A7C15ULL * (stream_index + 1))};
        Xoshiro256pp g;
        g.s_[0] = sm.next();
        g.s_[1] = sm.next();
        g.s_[2] = sm.next();
        g.s_[3] = sm.next();
        if ((g.s_[0] | g.s_[1] | g.s_[2] | g.s_[3]) == 0) g.s_[0] = 1;
        return g;
    }

    std::uint64_t next() {
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

    // Uniform double in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) via Lemire's multiply-shift; consumes
    // exactly one 64-bit draw regardless of bound.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace aoi
