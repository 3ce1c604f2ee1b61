/**
 * @file random.hpp
 * @brief Seedable random streams with explicit substream derivation.
 *
 * Every stochastic component takes a RandomStream by reference instead of
 * touching global state, so snapshots / Monte-Carlo batches can be generated
 * independently and reproducibly. Substreams are derived by mixing the base
 * seed with salt words (SplitMix64), so stream(seed, a, b) is stable across
 * runs and independent of call order.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace cellfree {

namespace detail {

// SplitMix64 finalizer; used only for seed mixing.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t s1, std::uint64_t s2,
                              std::uint64_t s3) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ s1);
    h = splitmix64(h ^ s2);
    h = splitmix64(h ^ s3);
    return h;
}

}  // namespace detail

/// Salt words used to keep the per-purpose substreams disjoint.
enum class StreamPurpose : std::uint64_t {
    Geometry = 0x67656f6dULL,   // snapshot geometry + shadowing
    Pilots = 0x70696c6fULL,     // random pilot assignment
    Oracle = 0x6f72636cULL,     // Monte-Carlo channel draws
    Misc = 0x6d697363ULL,
};

/**
 * Deterministic random stream (mt19937_64 core).
 *
 * uniform()/normal() avoid std::*_distribution on purpose: their output is
 * implementation-defined, while this generator produces the same sequence on
 * every standard-conforming platform.
 */
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(detail::splitmix64(seed)) {}

    RandomStream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t id1,
                 std::uint64_t id2 = 0)
        : gen_(detail::mix_seed(seed, static_cast<std::uint64_t>(purpose), id1, id2)) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n).
    int uniform_int(int n) { return static_cast<int>(uniform() * static_cast<double>(n)); }

    /// Standard normal via Box-Muller (second value cached).
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        cached_ = r * std::sin(t);
        has_cached_ = true;
        return r * std::cos(t);
    }

    /// Circular-symmetric complex normal with total variance `var`
    /// (var/2 per real dimension).
    std::complex<double> cnormal(double var) {
        const double s = std::sqrt(var * 0.5);
        return {s * normal(), s * normal()};
    }

  private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace cellfree
