#pragma once

#include <cstdint>

namespace tbw {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic seed derivation for per-match / per-player / per-game streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = base;
    std::uint64_t out = splitmix64(s);
    s ^= a + 0x9E3779B97F4A7C15ULL;
    out ^= splitmix64(s);
    s ^= b + 0xC2B2AE3D27D4EB4FULL;
    out ^= splitmix64(s);
    s ^= c + 0x165667B19E3779F9ULL;
    out ^= splitmix64(s);
    return out;
}

/// Seeded generator with its own bounded draws; stdlib distributions are not
/// implementation-stable, and replays must be.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed ? seed : 0x853C49E6748FEA9BULL) {}

    std::uint64_t next() { return splitmix64(state_); }

    /// Uniform in [0, n); rejection-sampled so every bound is exact.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace tbw
