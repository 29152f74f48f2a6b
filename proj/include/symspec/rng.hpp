#pragma once

#include <cstdint>

namespace symspec {

/// SplitMix64; used for seeding and for deriving per-trial substream seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// The SplitMix64 output function applied to a raw word.
std::uint64_t splitmix_finalize(std::uint64_t x);

/// Substream seed for trial t under master seed `seed`. Order independent,
/// so trials can be generated in any order (or in parallel) identically.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t);

/// xoshiro256++ with state seeded via SplitMix64.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();

    /// Uniform on (0, 1): 53-bit mantissa, rejecting exact zero.
    double next_unit();

private:
    std::uint64_t s_[4];
};

/// Standard Gaussian variates via the Marsaglia polar method.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}
    double next();

private:
    Xoshiro256 rng_;
    double spare_ = 0;
    bool has_spare_ = false;
};

}  // namespace symspec
