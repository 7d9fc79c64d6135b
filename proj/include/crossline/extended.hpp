#pragma once

#include <string>
#include <string_view>

#include "crossline/scalar.hpp"

namespace crossline {

/**
 * The projective extension K u {inf} of a skew field.
 *
 * Arithmetic here is deliberately partial: only the forms the cross-ratio
 * formulas and the Moebius evaluation need are defined (ext_inv and
 * absorb_mul); any other combination involving inf is a hard error.
 * inf carries the field tag of its context and compares equal only to inf
 * of the same field.
 */
class ExtendedScalar {
public:
    ExtendedScalar() = default;
    ExtendedScalar(Scalar s) : finite_(std::move(s)), infinite_(false) {} // NOLINT: implicit by design
    static ExtendedScalar infinity(FieldTag tag);

    bool is_infinity() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    /// The finite value; throws UndefinedFormError when called on inf.
    const Scalar& finite() const;
    FieldTag field() const { return finite_.field(); }

    bool operator==(const ExtendedScalar&) const = default;

private:
    Scalar finite_;        // zero of the field when infinite_
    bool infinite_ = false;
};

/// Involution of K u {inf}: a -> a^-1 for a != 0, 0 -> inf, inf -> 0.
ExtendedScalar ext_inv(const ExtendedScalar& x);

/// Right multiplication x * f with inf absorbing: inf * f = inf for
/// finite f != 0; inf * 0 is an undefined form and throws.
ExtendedScalar absorb_mul(const ExtendedScalar& x, const Scalar& f);

/// Text form: scalar literal, or the literal `inf`.
std::string format_extended(const ExtendedScalar& x);
ExtendedScalar parse_extended(std::string_view text, FieldTag tag);

} // namespace crossline
