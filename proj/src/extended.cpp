#include "crossline/extended.hpp"

namespace crossline {

ExtendedScalar ExtendedScalar::infinity(FieldTag tag) {
    ExtendedScalar x;
    x.finite_ = Scalar::zero(tag);
    x.infinite_ = true;
    return x;
}

const Scalar& ExtendedScalar::finite() const {
    if (infinite_) throw UndefinedFormError("finite value of inf");
    return finite_;
}

ExtendedScalar ext_inv(const ExtendedScalar& x) {
    if (x.is_infinity()) return Scalar::zero(x.field());
    if (x.finite().is_zero()) return ExtendedScalar::infinity(x.field());
    return inv(x.finite());
}

ExtendedScalar absorb_mul(const ExtendedScalar& x, const Scalar& f) {
    if (x.is_infinity()) {
        if (f.is_zero()) throw UndefinedFormError("inf * 0");
        return ExtendedScalar::infinity(x.field());
    }
    return x.finite() * f;
}

std::string format_extended(const ExtendedScalar& x) {
    return x.is_infinity() ? "inf" : format_scalar(x.finite());
}

ExtendedScalar parse_extended(std::string_view text, FieldTag tag) {
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a != std::string_view::npos && text.substr(a, b - a + 1) == "inf")
        return ExtendedScalar::infinity(tag);
    return parse_scalar(text, tag);
}

} // namespace crossline
