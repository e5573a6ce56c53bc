#pragma once

#include <cstdint>

namespace ccpivot {

/// Master seed for a run. Sub-seeds for independent trials are derived by
/// mixing the trial index through the splitmix64 finalizer, so results do
/// not depend on how work is scheduled across threads.
struct Seed {
    std::uint64_t value = 0;

    Seed sub(std::uint64_t index) const;

    friend bool operator==(const Seed&, const Seed&) = default;
};

namespace detail {

// splitmix64 finalizer (Steele, Lea, Flood; public-domain reference constants).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

inline Seed Seed::sub(std::uint64_t index) const {
    return Seed{detail::mix64(value + (index + 1) * 0x9E3779B97F4A7C15ULL)};
}

/// Deterministic 64-bit generator (splitmix64 stream). Small, fast, and
/// identical on every platform, which keeps seeded outputs byte-stable.
class SplitMix64 {
public:
    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return detail::mix64(state_);
    }

    /// Unbiased draw from [0, bound); bound must be nonzero. Lemire's
    /// multiply-shift rejection method.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace ccpivot
