#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace bactlink {

/// Counter-style generator used for all simulation draws. Streams are cheap
/// to construct, so every (stage, trial) pair gets its own: results do not
/// depend on thread count or on which other stages consumed randomness.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Independent stream keyed by (seed, stream, trial).
inline SplitMix64 make_stream(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t trial) {
    std::uint64_t s =
        detail::mix64(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
    s = detail::mix64(s ^ (trial + 0xd1b54a32d192ed03ULL));
    return SplitMix64(s);
}

/// Standard normals via Box-Muller, caching the second draw of each pair.
class GaussianSource {
  public:
    explicit GaussianSource(SplitMix64 rng) : rng_(rng) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = rng_.uniform01();
        while (u1 <= 0.0) u1 = rng_.uniform01();
        const double u2 = rng_.uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

  private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Binomial draw as a Bernoulli sum; exact and branch-free in p edge cases.
inline int binomial(SplitMix64& rng, int n, double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return n;
    int k = 0;
    for (int i = 0; i < n; ++i) k += rng.uniform01() < p ? 1 : 0;
    return k;
}

}  // namespace bactlink
