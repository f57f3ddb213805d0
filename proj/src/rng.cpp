#include "jetline/rng.hpp"

namespace jetline {

std::uint64_t Rng::next_u64() {
    // SplitMix64 applied to seed ^ golden-ratio-scrambled counter.
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (++counter_);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::next_int(long lo, long hi) {
    if (hi < lo) throw UsageError("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
}

mpq_class Rng::next_rational(long height) {
    if (height < 1) throw UsageError("height must be >= 1");
    long num = next_int(-height, height);
    long den = next_int(1, height);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

GQ Rng::next_gaussian_rational(long height) {
    mpq_class re = next_rational(height);
    mpq_class im = next_rational(height);
    return {re, im};
}

GQ Rng::next_nonzero(long height) {
    for (;;) {
        GQ v = next_gaussian_rational(height);
        if (!v.is_zero()) return v;
    }
}

}  // namespace jetline
