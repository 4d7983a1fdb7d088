#pragma once

// Seeded PRNG with a platform-independent stream. std::mt19937 is portable
// but the standard distributions are not, so bounded draws are done by hand.

#include <cstdint>

namespace cogitao {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Fold extra words into a seed; used to derive independent sub-streams
// (per sample index, per split, per retry) from one master seed.
inline uint64_t derive_seed(uint64_t seed) { return splitmix64(seed); }

template <typename... Rest>
inline uint64_t derive_seed(uint64_t seed, uint64_t word, Rest... rest) {
    return derive_seed(splitmix64(seed ^ (word + 0x9e3779b97f4a7c15ULL)), rest...);
}

// PCG32 (Melissa O'Neill, pcg-random.org), fixed increment variant.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) {
        state_ = 0;
        next_u32();
        state_ += splitmix64(seed);
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + 1442695040888963407ULL;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Unbiased draw in [0, bound). bound must be > 0.
    uint32_t below(uint32_t bound) {
        uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

    // Inclusive range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<uint32_t>(hi - lo + 1)));
    }

    bool chance(uint32_t num, uint32_t den) { return below(den) < num; }

private:
    uint64_t state_;
};

} // namespace cogitao
