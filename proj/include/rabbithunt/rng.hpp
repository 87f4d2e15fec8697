#pragma once

#include <cstdint>

namespace rabbithunt {

// Reproducibility contract: all randomness flows through xoshiro256**
// seeded via splitmix64. Both algorithms are fixed and platform-independent,
// so a (master seed, trial index) pair always replays the same hunt.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-trial seed rule: output number `trial` (0-based) of the splitmix64
// sequence seeded with the master seed. splitmix64 is a counter generator,
// so the jump is O(1).
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    std::uint64_t s = master_seed + trial * 0x9E3779B97F4A7C15ULL;
    return splitmix64(s);
}

class Xoshiro256StarStar {
  public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_)
            word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on {0, ..., bound-1} by bitmask rejection: exactly unbiased,
    // no modulo skew.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1)
            return 0;
        const std::uint64_t mask = mask_for(bound - 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

    // Uniform on the 2*radius+1 integers {-radius, ..., radius}.
    std::int64_t next_symmetric(std::int64_t radius) {
        const auto span = static_cast<std::uint64_t>(2 * radius + 1);
        return static_cast<std::int64_t>(next_below(span)) - radius;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t mask_for(std::uint64_t v) {
        std::uint64_t m = v;
        m |= m >> 1;
        m |= m >> 2;
        m |= m >> 4;
        m |= m >> 8;
        m |= m >> 16;
        m |= m >> 32;
        return m;
    }

    std::uint64_t state_[4];
};

} // namespace rabbithunt
