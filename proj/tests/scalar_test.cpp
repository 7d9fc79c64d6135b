#include "doctest.h"

#include "crossline/rng.hpp"
#include "crossline/scalar.hpp"

using namespace crossline;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar(BigRational(n, d)); }
Scalar quat(long long a, long long b, long long c, long long d) {
    return Scalar(RationalQuaternion{a, b, c, d});
}
const Scalar qi = quat(0, 1, 0, 0);
const Scalar qj = quat(0, 0, 1, 0);
const Scalar qk = quat(0, 0, 0, 1);

} // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(2, 3) * rat(3, 2) == rat(1));
    CHECK(-rat(1, 2) == rat(-1, 2));
    CHECK(-rat(0) == rat(0));
    CHECK(rat(2, 4) == rat(1, 2)); // canonical form unique per value
}

TEST_CASE("quaternion defining relations") {
    CHECK(qi * qj == qk);
    CHECK(qj * qi == -qk);
    CHECK(qi * qi == quat(-1, 0, 0, 0));
    CHECK(qj * qj == quat(-1, 0, 0, 0));
    CHECK(qk * qk == quat(-1, 0, 0, 0));
    CHECK(qi + Scalar::zero(FieldTag::Quaternion) == qi);
    CHECK(qi + qj == quat(0, 1, 1, 0));
    CHECK(qi - qj == quat(0, 1, -1, 0));
}

TEST_CASE("inverses") {
    CHECK(inv(qi) == -qi);
    // Oracle for the derived value: multiply back on both sides.
    Scalar q = quat(1, 1, 1, 1);
    Scalar qinv = inv(q);
    CHECK(q * qinv == Scalar::one(FieldTag::Quaternion));
    CHECK(qinv * q == Scalar::one(FieldTag::Quaternion));
    CHECK(qinv == Scalar(RationalQuaternion{{1, 4}, {-1, 4}, {-1, 4}, {-1, 4}}));

    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        Scalar minus_one = -Scalar::one(tag);
        CHECK(inv(minus_one) == minus_one);
        CHECK(minus_one * minus_one == Scalar::one(tag));
        CHECK_THROWS_AS(inv(Scalar::zero(tag)), ZeroInverseError);
    }
}

TEST_CASE("int_mul matches the fold") {
    SplitMix64 g{77};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        Scalar a = gen_scalar(g, tag, 8);
        Scalar folded = Scalar::zero(tag);
        for (int n = 0; n <= 6; ++n) {
            CHECK(int_mul(n, a) == folded);
            CHECK(int_mul(-n, a) == -folded);
            folded = folded + a;
        }
        CHECK(int_mul(0, a).is_zero());
    }
    CHECK(int_mul(3, rat(1, 2)) == rat(3, 2));
    CHECK(int_mul(-2, qi) == quat(0, -2, 0, 0));
}

TEST_CASE("commutes and centrality") {
    CHECK_FALSE(commutes(qi, qj));
    // Derived by expanding both products: i(1+2i) = i+2i^2 = (1+2i)i.
    CHECK(commutes(qi, quat(1, 2, 0, 0)));
    CHECK(commutes(rat(3), rat(5, 7)));

    CHECK(is_central(quat(3, 0, 0, 0) * inv(quat(4, 0, 0, 0))));
    CHECK_FALSE(is_central(qi));
    CHECK(is_central(rat(9, 4)));
    CHECK(is_central(Scalar(GaussianRational{{1, 2}, {3, 4}})));

    SplitMix64 g{5};
    for (int t = 0; t < 50; ++t) {
        Scalar a = gen_scalar(g, FieldTag::Quaternion, 6);
        const auto& q = a.quaternion();
        CHECK(is_central(a) == (q.b == 0 && q.c == 0 && q.d == 0));
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(qi, qj) == -qi); // expand (-j) i j
    CHECK(conjugate(qi, Scalar::one(FieldTag::Quaternion)) == qi);
    CHECK_THROWS_AS(conjugate(qi, Scalar::zero(FieldTag::Quaternion)), ZeroInverseError);

    SplitMix64 g{6};
    for (int t = 0; t < 60; ++t) {
        Scalar p = gen_scalar(g, FieldTag::Quaternion, 6);
        Scalar q = gen_nonzero(g, FieldTag::Quaternion, 6);
        if (is_central(p)) {
            CHECK(conjugate(p, q) == p);
        } else {
            // A non-central p admits a witness q with q^-1 p q != p.
            CHECK((conjugate(p, qi) != p || conjugate(p, qj) != p));
        }
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    SplitMix64 g{42};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        for (int t = 0; t < 40; ++t) {
            Scalar a = gen_scalar(g, tag, 10);
            Scalar b = gen_scalar(g, tag, 10);
            Scalar c = gen_scalar(g, tag, 10);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + (-a) == Scalar::zero(tag));
            if (!a.is_zero()) {
                CHECK(a * inv(a) == Scalar::one(tag));
                CHECK(inv(a) * a == Scalar::one(tag));
                CHECK(inv(inv(a)) == a);
            }
            if (is_commutative(tag)) CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("field mismatch is an error") {
    CHECK_THROWS_AS(rat(1) + qi, FieldMismatchError);
    CHECK_THROWS_AS(rat(1) * Scalar(GaussianRational{{1}, {1}}), FieldMismatchError);
    CHECK_THROWS_AS(commutes(rat(1), qi), FieldMismatchError);
    CHECK(rat(1) != qi); // equality is total, structural
}

TEST_CASE("parse examples") {
    CHECK(parse_scalar("-3/4", FieldTag::Rational) == rat(-3, 4));
    CHECK(parse_scalar("(1/2, -1)", FieldTag::Gaussian) == Scalar(GaussianRational{{1, 2}, -1}));
    CHECK(parse_scalar("(0, 1, 0, 0)", FieldTag::Quaternion) == qi);
    CHECK(parse_scalar("7", FieldTag::Rational) == rat(7)); // den omitted
    CHECK(parse_scalar("2/4", FieldTag::Rational) == rat(1, 2));
    // Central embedding of a bare rational.
    CHECK(parse_scalar("4/3", FieldTag::Quaternion) ==
          Scalar(RationalQuaternion{{4, 3}, 0, 0, 0}));
    CHECK(parse_scalar(" -1/2 ", FieldTag::Gaussian) == Scalar(GaussianRational{{-1, 2}, 0}));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_scalar("", FieldTag::Rational), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/", FieldTag::Rational), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", FieldTag::Rational), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1, 2", FieldTag::Gaussian), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1, 2)", FieldTag::Rational), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1, 2)", FieldTag::Quaternion), ParseError);
    CHECK_THROWS_AS(parse_scalar("3/4x", FieldTag::Rational), ParseError);
    try {
        parse_scalar("1/0", FieldTag::Rational);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("format is canonical and parse inverts it") {
    CHECK(format_scalar(rat(-3, 4)) == "-3/4");
    CHECK(format_scalar(rat(5)) == "5");
    CHECK(format_scalar(Scalar(GaussianRational{{1, 2}, -1})) == "(1/2, -1)");
    CHECK(format_scalar(qi) == "(0, 1, 0, 0)");
    CHECK(format_scalar(Scalar(RationalQuaternion{{4, 3}, 0, 0, 0})) == "4/3");

    SplitMix64 g{2024};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        for (int t = 0; t < 60; ++t) {
            Scalar a = gen_scalar(g, tag, 30);
            CHECK(parse_scalar(format_scalar(a), tag) == a);
        }
    }
}

TEST_CASE("field names") {
    CHECK(field_from_name("rat") == FieldTag::Rational);
    CHECK(field_from_name("q") == FieldTag::Quaternion);
    CHECK(field_from_name("gauss") == FieldTag::Gaussian);
    CHECK(field_from_name("quaternion") == FieldTag::Quaternion);
    CHECK_FALSE(field_from_name("complex").has_value());
}
