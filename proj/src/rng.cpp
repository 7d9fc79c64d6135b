#include "crossline/rng.hpp"

namespace crossline {

BigRational gen_rational(SplitMix64& g, std::int64_t bound) {
    std::int64_t num = uniform_int(g, -bound, bound);
    std::int64_t den = uniform_int(g, 1, bound);
    return BigRational(num, den);
}

Scalar gen_scalar(SplitMix64& g, FieldTag field, std::int64_t bound) {
    switch (field) {
        case FieldTag::Rational:
            return Scalar(gen_rational(g, bound));
        case FieldTag::Gaussian: {
            BigRational re = gen_rational(g, bound);
            BigRational im = gen_rational(g, bound);
            return Scalar(GaussianRational{re, im});
        }
        case FieldTag::Quaternion: {
            BigRational a = gen_rational(g, bound);
            BigRational b = gen_rational(g, bound);
            BigRational c = gen_rational(g, bound);
            BigRational d = gen_rational(g, bound);
            return Scalar(RationalQuaternion{a, b, c, d});
        }
    }
    throw Error("bad field tag");
}

Scalar gen_nonzero(SplitMix64& g, FieldTag field, std::int64_t bound) {
    for (int t = 0; t < kMaxRejects; ++t) {
        Scalar s = gen_scalar(g, field, bound);
        if (!s.is_zero()) return s;
    }
    throw GenerationError("nonzero scalar");
}

Scalar gen_central(SplitMix64& g, FieldTag field, std::int64_t bound) {
    return Scalar::from_rational(field, gen_rational(g, bound));
}

Scalar gen_central_nonzero(SplitMix64& g, FieldTag field, std::int64_t bound) {
    for (int t = 0; t < kMaxRejects; ++t) {
        Scalar s = gen_central(g, field, bound);
        if (!s.is_zero()) return s;
    }
    throw GenerationError("nonzero central scalar");
}

} // namespace crossline
