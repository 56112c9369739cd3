#pragma once

#include <complex>
#include <cstdint>

namespace twrelay {

// SplitMix64 step: advances the state and returns the next 64-bit word.
// Used for seeding and for deriving decorrelated substream states.
std::uint64_t splitmix64_next(std::uint64_t& state);

// xoshiro256++ generator with Box-Muller Gaussian sampling.  Each Monte
// Carlo trial owns an independent instance derived from (seed, stream),
// making every trial reproducible in isolation and the aggregate
// independent of scheduling.
class Xoshiro256 {
  public:
    // Seeds the four state words through SplitMix64.
    explicit Xoshiro256(std::uint64_t seed);

    // Decorrelated substream: mixes the stream index into the seed before
    // expansion, so (seed, k) and (seed, k') never share state.
    Xoshiro256(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    // Uniform on (0, 1]: 53-bit mantissa, never returns 0.
    double next_unit();

    // Standard normal via Box-Muller; generates pairs, caches the second.
    double next_normal();

    // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> next_complex_normal(double variance);

  private:
    void seed_state(std::uint64_t seed);

    std::uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

// Exponential variate with the given mean (inverse-CDF method).
double sample_exponential(Xoshiro256& stream, double mean);

}  // namespace twrelay
