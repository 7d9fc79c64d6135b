#pragma once

#include <cstdint>

#include "crossline/scalar.hpp"

namespace crossline {

/**
 * Counter-based splittable PRNG used by every generator in the repo.
 *
 * Output i of a stream with seed s is
 *     finalize(s + (i+1) * 0x9E3779B97F4A7C15)
 * where finalize is the SplitMix64 finalizer
 *     z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
 *     z ^= z >> 27; z *= 0x94D049BB133111EB;
 *     z ^= z >> 31;
 * Sub-stream k of seed s starts from substream_seed(s, k) =
 * finalize(s ^ finalize(k + 1)). Values are position-addressable, so
 * reports are identical for any worker count.
 */
struct SplitMix64 {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    static std::uint64_t finalize(std::uint64_t z) {
        z ^= z >> 30; z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27; z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t next() {
        ++counter;
        return finalize(seed + counter * 0x9E3779B97F4A7C15ULL);
    }
};

inline std::uint64_t substream_seed(std::uint64_t parent, std::uint64_t index) {
    return SplitMix64::finalize(parent ^ SplitMix64::finalize(index + 1));
}

/// Uniform draw in [lo, hi] (inclusive); lo <= hi.
inline std::int64_t uniform_int(SplitMix64& g, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(g.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// One rational component: numerator in [-bound, bound], denominator in
/// [1, bound]. Numerator is drawn first.
BigRational gen_rational(SplitMix64& g, std::int64_t bound);

/// Uniform bounded scalar of the field: one, two or four rational draws
/// in component order.
Scalar gen_scalar(SplitMix64& g, FieldTag field, std::int64_t bound);

/// Rejection helpers (at most 1000 retries each, then GenerationError).
Scalar gen_nonzero(SplitMix64& g, FieldTag field, std::int64_t bound);
/// Central element: bare rational draw embedded into the field.
Scalar gen_central(SplitMix64& g, FieldTag field, std::int64_t bound);
Scalar gen_central_nonzero(SplitMix64& g, FieldTag field, std::int64_t bound);

inline constexpr int kMaxRejects = 1000;

} // namespace crossline
