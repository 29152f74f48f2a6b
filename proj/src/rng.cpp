#include "symspec/rng.hpp"

#include <cmath>

namespace symspec {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix_finalize(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return splitmix_finalize(state_);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
    return splitmix_finalize(seed + (t + 1) * kGolden);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& s : s_) s = sm.next();
}

std::uint64_t Xoshiro256::next() {
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

double Xoshiro256::next_unit() {
    for (;;) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        if (u > 0) return u;
    }
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    for (;;) {
        const double u = 2 * rng_.next_unit() - 1;
        const double v = 2 * rng_.next_unit() - 1;
        const double s = u * u + v * v;
        if (s >= 1 || s == 0) continue;
        const double scale = std::sqrt(-2 * std::log(s) / s);
        spare_ = v * scale;
        has_spare_ = true;
        return u * scale;
    }
}

}  // namespace symspec
