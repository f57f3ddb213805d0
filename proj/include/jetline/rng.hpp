#pragma once

#include "jetline/gaussian_rational.hpp"

#include <cstdint>

namespace jetline {

/// Counter-based deterministic generator (SplitMix64 over seed and counter).
/// Identical seed gives an identical stream, independent of call sites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    /// Uniform in [lo, hi] inclusive.
    long next_int(long lo, long hi);
    /// Rational with numerator in [-height, height] and denominator in [1, height].
    mpq_class next_rational(long height);
    GQ next_gaussian_rational(long height);
    /// Nonzero Gaussian rational.
    GQ next_nonzero(long height);

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace jetline
