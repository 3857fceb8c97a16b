#pragma once

#include <cstdint>
#include <cmath>

namespace aircomp {

// Deterministic, platform-independent RNG (xoshiro256++) with cheap
// counter-based substreams. Substream k of a seed is statistically
// independent of substream j != k, so Monte-Carlo trials can be keyed
// by trial index and reproduced regardless of execution order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) { seed_state(seed, 0); }
    Rng(std::uint64_t seed, std::uint64_t stream) { seed_state(seed, stream); }

    static Rng substream(std::uint64_t seed, std::uint64_t stream) { return Rng(seed, stream); }

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

    // uniform on [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n), n >= 1; Lemire rejection keeps it unbiased
    std::uint64_t uniform_int(std::uint64_t n) {
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<__uint128_t>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    static std::uint64_t splitmix64(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    void seed_state(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t st = seed ^ (0xD2B74407B1CE6E93ULL * (stream + 1));
        s_[0] = splitmix64(st);
        s_[1] = splitmix64(st);
        s_[2] = splitmix64(st);
        s_[3] = splitmix64(st);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is invalid
    }

    std::uint64_t s_[4];
};

}  // namespace aircomp
