#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "crossline/errors.hpp"

namespace crossline {

using BigInt      = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always reduced with positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

/// Which of the three concrete skew fields a Scalar belongs to.
enum class FieldTag : std::uint8_t { Rational, Gaussian, Quaternion };

const char* field_name(FieldTag tag);
/// Accepts "rat", "gauss", "quat" and any unambiguous prefix ("r", "g", "q").
std::optional<FieldTag> field_from_name(std::string_view name);
inline bool is_commutative(FieldTag tag) { return tag != FieldTag::Quaternion; }

/// re + im*i with i^2 = -1 over the rationals. Commutative.
struct GaussianRational {
    BigRational re;
    BigRational im;

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussianRational&) const = default;
};

GaussianRational operator+(const GaussianRational&, const GaussianRational&);
GaussianRational operator-(const GaussianRational&, const GaussianRational&);
GaussianRational operator-(const GaussianRational&);
GaussianRational operator*(const GaussianRational&, const GaussianRational&);
GaussianRational inv(const GaussianRational&);

/// a + b*i + c*j + d*k with i^2 = j^2 = k^2 = -1, ij = k = -ji.
/// A noncommutative division ring: every nonzero element is invertible.
struct RationalQuaternion {
    BigRational a;
    BigRational b;
    BigRational c;
    BigRational d;

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool operator==(const RationalQuaternion&) const = default;
};

RationalQuaternion operator+(const RationalQuaternion&, const RationalQuaternion&);
RationalQuaternion operator-(const RationalQuaternion&, const RationalQuaternion&);
RationalQuaternion operator-(const RationalQuaternion&);
RationalQuaternion operator*(const RationalQuaternion&, const RationalQuaternion&);
RationalQuaternion inv(const RationalQuaternion&);

/**
 * A tagged element of exactly one of the three concrete skew fields.
 *
 * All binary operations require both operands to carry the same tag and
 * throw FieldMismatchError otherwise, so verification suites can iterate
 * generically over fields. Values are immutable and exact; equality is
 * structural and coincides with value equality (canonical forms).
 */
class Scalar {
public:
    using Value = std::variant<BigRational, GaussianRational, RationalQuaternion>;

    Scalar() : value_(BigRational(0)) {}
    explicit Scalar(BigRational r) : value_(std::move(r)) {}
    explicit Scalar(GaussianRational g) : value_(std::move(g)) {}
    explicit Scalar(RationalQuaternion q) : value_(std::move(q)) {}

    static Scalar zero(FieldTag tag) { return from_int(tag, 0); }
    static Scalar one(FieldTag tag) { return from_int(tag, 1); }
    /// Central embedding of an integer into the field.
    static Scalar from_int(FieldTag tag, long long n);
    static Scalar from_rational(FieldTag tag, const BigRational& r);

    FieldTag field() const { return static_cast<FieldTag>(value_.index()); }
    bool is_zero() const;
    bool is_one() const;

    const Value& value() const { return value_; }
    const BigRational& rational() const { return std::get<BigRational>(value_); }
    const GaussianRational& gaussian() const { return std::get<GaussianRational>(value_); }
    const RationalQuaternion& quaternion() const { return std::get<RationalQuaternion>(value_); }

    bool operator==(const Scalar&) const = default;

private:
    Value value_;
};

Scalar operator+(const Scalar&, const Scalar&);
Scalar operator-(const Scalar&, const Scalar&);
Scalar operator-(const Scalar&);
Scalar operator*(const Scalar&, const Scalar&);

/// Multiplicative inverse; throws ZeroInverseError on zero (the inf
/// convention lives in the extended module).
Scalar inv(const Scalar&);

/// n-fold sum of a (n > 0), (-n)-fold sum of -a (n < 0), zero for n = 0.
Scalar int_mul(long long n, const Scalar& a);

/// True iff ab = ba.
bool commutes(const Scalar& a, const Scalar& b);

/// True iff a commutes with the whole field. For quaternions this is
/// decided by commuting with both i and j, which suffices by linearity.
bool is_central(const Scalar& a);

/// q^-1 * p * q. Throws ZeroInverseError for q = 0. Fixes p when p is central.
Scalar conjugate(const Scalar& p, const Scalar& q);

/**
 * Scalar literal grammar (UTF-8):
 *   rational   := ['-'] digits [ '/' digits ]
 *   gaussian   := '(' rational ', ' rational ')' | rational
 *   quaternion := '(' rational ', ' rational ', ' rational ', ' rational ')' | rational
 * A bare rational in a gaussian/quaternion context is the central embedding.
 * Throws ParseError carrying the byte position of the offense.
 */
Scalar parse_scalar(std::string_view text, FieldTag tag);

/// Canonical inverse of parse_scalar: reduced, den > 0, no space after '('
/// or before ')', single space after commas. Central gaussian/quaternion
/// values print as their bare rational embedding.
std::string format_scalar(const Scalar& s);

namespace detail {
void require_same_field(const Scalar& a, const Scalar& b, const char* op);
} // namespace detail

} // namespace crossline
