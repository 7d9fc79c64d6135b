#include "crossline/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace crossline {

const char* field_name(FieldTag tag) {
    switch (tag) {
        case FieldTag::Rational: return "rational";
        case FieldTag::Gaussian: return "gaussian";
        case FieldTag::Quaternion: return "quaternion";
    }
    return "?";
}

std::optional<FieldTag> field_from_name(std::string_view name) {
    if (name.empty()) return std::nullopt;
    auto prefix_of = [&](std::string_view full) {
        return name.size() <= full.size() && full.substr(0, name.size()) == name;
    };
    if (prefix_of("rational") || name == "rat") return FieldTag::Rational;
    if (prefix_of("gaussian") || name == "gauss") return FieldTag::Gaussian;
    if (prefix_of("quaternion") || name == "quat") return FieldTag::Quaternion;
    return std::nullopt;
}

// ---------------------------------------------------------------- gaussian

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
}
GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
}
GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
GaussianRational inv(const GaussianRational& x) {
    if (x.is_zero()) throw ZeroInverseError();
    BigRational n = x.re * x.re + x.im * x.im;
    return {x.re / n, -x.im / n};
}

// -------------------------------------------------------------- quaternion

RationalQuaternion operator+(const RationalQuaternion& x, const RationalQuaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
RationalQuaternion operator-(const RationalQuaternion& x, const RationalQuaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
RationalQuaternion operator-(const RationalQuaternion& x) {
    return {-x.a, -x.b, -x.c, -x.d};
}
RationalQuaternion operator*(const RationalQuaternion& x, const RationalQuaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}
RationalQuaternion inv(const RationalQuaternion& x) {
    if (x.is_zero()) throw ZeroInverseError();
    // Sum of four rational squares vanishes only at zero, so this is a
    // division ring.
    BigRational n = x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
    return {x.a / n, -x.b / n, -x.c / n, -x.d / n};
}

// ------------------------------------------------------------------ scalar

namespace detail {
void require_same_field(const Scalar& a, const Scalar& b, const char* op) {
    if (a.field() != b.field()) throw FieldMismatchError(op);
}
} // namespace detail

Scalar Scalar::from_int(FieldTag tag, long long n) {
    return from_rational(tag, BigRational(n));
}

Scalar Scalar::from_rational(FieldTag tag, const BigRational& r) {
    switch (tag) {
        case FieldTag::Rational: return Scalar(r);
        case FieldTag::Gaussian: return Scalar(GaussianRational{r, 0});
        case FieldTag::Quaternion: return Scalar(RationalQuaternion{r, 0, 0, 0});
    }
    throw Error("bad field tag");
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BigRational>) return v == 0;
        else return v.is_zero();
    }, value_);
}

bool Scalar::is_one() const { return *this == one(field()); }

template <typename Op>
static Scalar zip(const Scalar& a, const Scalar& b, const char* name, Op op) {
    detail::require_same_field(a, b, name);
    switch (a.field()) {
        case FieldTag::Rational: return Scalar(op(a.rational(), b.rational()));
        case FieldTag::Gaussian: return Scalar(op(a.gaussian(), b.gaussian()));
        case FieldTag::Quaternion: return Scalar(op(a.quaternion(), b.quaternion()));
    }
    throw Error("bad field tag");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return zip(a, b, "add", [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return zip(a, b, "sub", [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return zip(a, b, "mul", [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator-(const Scalar& a) {
    return std::visit([](const auto& v) { return Scalar(-v); }, a.value());
}

Scalar inv(const Scalar& a) {
    return std::visit([](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BigRational>) {
            if (v == 0) throw ZeroInverseError();
            return Scalar(BigRational(1) / v);
        } else {
            return Scalar(inv(v));
        }
    }, a.value());
}

Scalar int_mul(long long n, const Scalar& a) {
    // Equal to the n-fold sum (tested against the fold); the central
    // embedding commutes with everything, so the side does not matter.
    return Scalar::from_int(a.field(), n) * a;
}

bool commutes(const Scalar& a, const Scalar& b) {
    detail::require_same_field(a, b, "commutes");
    return a * b == b * a;
}

bool is_central(const Scalar& a) {
    if (a.field() != FieldTag::Quaternion) return true;
    const Scalar i{RationalQuaternion{0, 1, 0, 0}};
    const Scalar j{RationalQuaternion{0, 0, 1, 0}};
    return commutes(a, i) && commutes(a, j);
}

Scalar conjugate(const Scalar& p, const Scalar& q) {
    detail::require_same_field(p, q, "conjugate");
    if (q.is_zero()) throw ZeroInverseError("conjugation");
    return inv(q) * p * q;
}

// ---------------------------------------------------------- parse / format

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
};

BigInt parse_digits(Cursor& c) {
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) c.fail("expected digits");
    return BigInt(std::string(c.s.substr(start, c.pos - start)));
}

BigRational parse_rational(Cursor& c) {
    c.skip_ws();
    bool neg = c.eat('-');
    BigInt num = parse_digits(c);
    BigInt den = 1;
    if (c.eat('/')) {
        std::size_t den_pos = c.pos;
        den = parse_digits(c);
        if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    if (neg) num = -num;
    return BigRational(num, den);
}

std::string format_rational(const BigRational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

} // namespace

Scalar parse_scalar(std::string_view text, FieldTag tag) {
    Cursor c{text};
    c.skip_ws();
    Scalar result = Scalar::zero(tag);
    if (c.pos < c.s.size() && c.s[c.pos] == '(') {
        if (tag == FieldTag::Rational) c.fail("rational literal cannot be a tuple");
        ++c.pos;
        std::size_t n = tag == FieldTag::Gaussian ? 2 : 4;
        BigRational parts[4];
        for (std::size_t k = 0; k < n; ++k) {
            parts[k] = parse_rational(c);
            c.skip_ws();
            if (k + 1 < n && !c.eat(',')) c.fail("expected ','");
        }
        if (!c.eat(')')) c.fail("expected ')'");
        result = tag == FieldTag::Gaussian
                     ? Scalar(GaussianRational{parts[0], parts[1]})
                     : Scalar(RationalQuaternion{parts[0], parts[1], parts[2], parts[3]});
    } else {
        // Bare rational: embeds centrally into gaussian/quaternion contexts.
        result = Scalar::from_rational(tag, parse_rational(c));
    }
    c.skip_ws();
    if (c.pos != c.s.size()) c.fail("trailing characters");
    return result;
}

std::string format_scalar(const Scalar& s) {
    switch (s.field()) {
        case FieldTag::Rational:
            return format_rational(s.rational());
        case FieldTag::Gaussian: {
            const auto& g = s.gaussian();
            if (g.im == 0) return format_rational(g.re);
            return "(" + format_rational(g.re) + ", " + format_rational(g.im) + ")";
        }
        case FieldTag::Quaternion: {
            const auto& q = s.quaternion();
            if (q.b == 0 && q.c == 0 && q.d == 0) return format_rational(q.a);
            return "(" + format_rational(q.a) + ", " + format_rational(q.b) + ", " +
                   format_rational(q.c) + ", " + format_rational(q.d) + ")";
        }
    }
    throw Error("bad field tag");
}

} // namespace crossline
