#pragma once

#include <cstdint>
#include <limits>

namespace blocksing {

/// SplitMix64 (Steele, Lea, Flood 2014). Used for every seeded choice so that
/// generated fixtures are reproducible in any language:
///
///     state += 0x9e3779b97f4a7c15
///     z = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9
///     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///     return z ^ (z >> 31)
///
/// uniform(lo, hi) is lo + next() % (hi - lo + 1).
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Inclusive range; requires lo <= hi.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

private:
    std::uint64_t state_;
};

}  // namespace blocksing
