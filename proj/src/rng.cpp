#include "twrelay/rng.hpp"

#include <cmath>

#include "twrelay/errors.hpp"

namespace twrelay {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) { seed_state(seed); }

Xoshiro256::Xoshiro256(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t st = seed;
    const std::uint64_t mixed = splitmix64_next(st);
    seed_state(mixed ^ (stream * 0xD1B54A32D192ED03ULL));
}

void Xoshiro256::seed_state(std::uint64_t seed) {
    std::uint64_t st = seed;
    bool all_zero = true;
    for (auto& word : state_) {
        word = splitmix64_next(st);
        all_zero = all_zero && word == 0;
    }
    if (all_zero) state_[0] = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xoshiro256::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256::next_unit() {
    return 1.0 - static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

std::complex<double> Xoshiro256::next_complex_normal(double variance) {
    const double scale = std::sqrt(0.5 * variance);
    const double re = next_normal();
    const double im = next_normal();
    return {re * scale, im * scale};
}

double sample_exponential(Xoshiro256& stream, double mean) {
    if (!(mean > 0.0) || !std::isfinite(mean)) {
        throw parameter_error("sample_exponential: mean must be positive");
    }
    return -mean * std::log(stream.next_unit());
}

}  // namespace twrelay
