#include "doctest.h"

#include "crossline/ratios.hpp"

using namespace crossline;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar(BigRational(n, d)); }
Scalar quat(long long a, long long b, long long c, long long d) {
    return Scalar(RationalQuaternion{a, b, c, d});
}
const Scalar qi = quat(0, 1, 0, 0);
const Scalar qj = quat(0, 0, 1, 0);
const Scalar qk = quat(0, 0, 0, 1);

ExtendedScalar cr4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    return cross_ratio(CrossRatioInput::of_scalars(a, b, c, d));
}

} // namespace

TEST_CASE("ratio2") {
    CHECK(ratio2(rat(6), rat(3)) == rat(2));
    CHECK(ratio2(rat(5, 7), rat(5, 7)) == rat(1));
    CHECK(ratio2(qi, qj) == qk); // j^-1 i = (-j) i = k
    CHECK_THROWS_AS(ratio2(rat(1), rat(0)), AdmissibilityError);
}

TEST_CASE("ratio3") {
    CHECK(ratio3(rat(3), rat(2), rat(1)) == rat(2)); // (2-1)^-1 (3-1)
    CHECK(ratio3(rat(4), rat(4), rat(1)) == rat(1)); // numerator = denominator
    CHECK(ratio3(rat(1), rat(5), rat(1)) == rat(0)); // a = c
    CHECK_THROWS_AS(ratio3(rat(1), rat(2), rat(2)), AdmissibilityError);
}

TEST_CASE("cross_ratio definitional examples") {
    CHECK(cr4(rat(0), rat(1), rat(2), rat(3)) == ExtendedScalar(rat(4, 3)));
    CHECK(cr4(rat(5), rat(5), rat(2), rat(3)) == ExtendedScalar(rat(1))); // both brackets collapse
    // Finite admissible input never returns inf.
    CHECK(cr4(rat(0), rat(0), rat(2), rat(3)).is_finite());
}

TEST_CASE("cross_ratio admissibility errors name the constraint") {
    try {
        cr4(rat(1), rat(2), rat(2), rat(5));
        CHECK(false);
    } catch (const AdmissibilityError& e) {
        CHECK(e.violated == "B != C violated");
    }
    try {
        cr4(rat(1), rat(2), rat(3), rat(1));
        CHECK(false);
    } catch (const AdmissibilityError& e) {
        CHECK(e.violated == "A != D violated");
    }
    const ExtendedScalar inf = ExtendedScalar::infinity(FieldTag::Rational);
    CHECK_THROWS_AS(CrossRatioInput::make(inf, inf, rat(1), rat(2)), AdmissibilityError);
}

TEST_CASE("infinite-slot formulas") {
    const ExtendedScalar inf = ExtendedScalar::infinity(FieldTag::Rational);
    // c_r(A,B;C,inf) = r(A,B;C)
    CHECK(cross_ratio(CrossRatioInput::make(rat(1), rat(-1), rat(0), inf)) ==
          ExtendedScalar(rat(-1)));
    CHECK(cross_ratio(CrossRatioInput::make(rat(5), rat(7), rat(2), inf)) ==
          ExtendedScalar(ratio3(rat(5), rat(7), rat(2))));
    // c_r(A,B;inf,D) = (A-D)^-1 (B-D), i.e. r(B,A;D)
    CHECK(cross_ratio(CrossRatioInput::make(rat(5), rat(7), inf, rat(2))) ==
          ExtendedScalar(ratio3(rat(7), rat(5), rat(2))));
    // c_r(A,inf;C,D) = (A-D)^-1 (A-C)
    CHECK(cross_ratio(CrossRatioInput::make(rat(5), inf, rat(2), rat(7))) ==
          ExtendedScalar(inv(rat(5) - rat(7)) * (rat(5) - rat(2))));
    // c_r(inf,B;C,D) = (B-D)(B-C)^-1
    CHECK(cross_ratio(CrossRatioInput::make(inf, rat(5), rat(2), rat(7))) ==
          ExtendedScalar((rat(5) - rat(7)) * inv(rat(5) - rat(2))));
}

TEST_CASE("negated-tuple resolution oracle") {
    // Both candidate right-hand sides evaluated on admissible tuples in
    // the rational and quaternion fields; the frozen resolution is the
    // only one that survives.
    SplitMix64 g{404};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Quaternion}) {
        long dc_failures = 0;
        for (int t = 0; t < 200; ++t) {
            auto s = gen_identity_sample(IdentityId::C0, g, tag, 8, t);
            const Scalar &A = s[0], &B = s[1], &C = s[2], &D = s[3];
            ExtendedScalar negated = cr4(-A, -B, -C, -D);
            CHECK(negated == cr4(A, B, C, D)); // frozen candidate, universal
            if (negated != cr4(A, B, D, C)) ++dc_failures;
        }
        CHECK(dc_failures > 0); // the swapped candidate is not universal
    }
    CHECK(std::string(kNegatedCrossRatioRhs) == "c_r(A,B;C,D)");
}

TEST_CASE("identity spot examples") {
    // C2 on (0,1,2,3): lhs = 1 - 4/3 = -1/3, rhs = c_r(0,2;1,3).
    auto c2 = check_identity(IdentityId::C2,
                             std::array{rat(0), rat(1), rat(2), rat(3)});
    REQUIRE(c2.checked());
    CHECK(c2.result.lhs == ExtendedScalar(rat(-1, 3)));
    CHECK(c2.result.rhs == ExtendedScalar(cr4(rat(0), rat(2), rat(1), rat(3)).finite()));
    CHECK(c2.result.holds);

    // C6 on the quaternion tuple (i, j, k, 1).
    auto c6 = check_identity(IdentityId::C6,
                             std::array{qi, qj, qk, Scalar::one(FieldTag::Quaternion)});
    REQUIRE(c6.checked());
    CHECK(c6.result.holds);

    // C7 with the central A = 2 and arbitrary quaternion B, C, D.
    auto c7 = check_identity(IdentityId::C7,
                             std::array{quat(2, 0, 0, 0), qi, qj, quat(1, 2, 3, 4)});
    REQUIRE(c7.checked());
    CHECK(c7.result.holds);

    // C9 restates the definitional decomposition.
    auto c9 = check_identity(IdentityId::C9, std::array{qi, qj, qk, quat(1, 1, 0, 0)});
    REQUIRE(c9.checked());
    CHECK(c9.result.holds);
}

TEST_CASE("hypothesis-violating samples are skipped, never passed") {
    auto non_central = check_identity(IdentityId::C7, std::array{qi, qj, qk, quat(1, 1, 1, 1)});
    CHECK_FALSE(non_central.checked());
    CHECK(non_central.skip_reason == "A not central");

    auto reflection_pair = check_identity(IdentityId::R5, std::array{rat(-3), rat(3)});
    CHECK_FALSE(reflection_pair.checked());
    CHECK(reflection_pair.skip_reason == "A = -B outside the claimed domain");

    auto degenerate = check_identity(IdentityId::C1, std::array{rat(1), rat(1), rat(2), rat(3)});
    CHECK_FALSE(degenerate.checked());

    // R5 both branches of the equivalence.
    auto equal_pair = check_identity(IdentityId::R5, std::array{rat(4), rat(4)});
    REQUIRE(equal_pair.checked());
    CHECK(equal_pair.result.holds);
    auto generic_pair = check_identity(IdentityId::R5, std::array{rat(4), rat(5)});
    REQUIRE(generic_pair.checked());
    CHECK(generic_pair.result.holds);
}

TEST_CASE("catalog holds on generated samples per claimed field") {
    SplitMix64 g{2718};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        for (IdentityId id : claimed_identities(tag)) {
            long checked = 0;
            for (long k = 0; k < 25; ++k) {
                auto sample = gen_identity_sample(id, g, tag, 8, k);
                auto outcome = check_identity(id, sample);
                if (!outcome.checked()) continue;
                ++checked;
                CHECK_MESSAGE(outcome.result.holds, identity_name(id), " over ", field_name(tag));
            }
            CHECK(checked > 0); // no identity verified vacuously
        }
    }
}

TEST_CASE("C2-C5 and C9 hold on sampled quaternions") {
    // Not asserted by the quaternion verification suite (they are
    // conformance-reported there), but the sampled observation is pinned
    // here: the definitional factor order makes all five identities exact
    // over the quaternions as well.
    SplitMix64 g{5050};
    for (IdentityId id : {IdentityId::C2, IdentityId::C3, IdentityId::C4, IdentityId::C5,
                          IdentityId::C9}) {
        long checked = 0;
        for (long k = 0; k < 200; ++k) {
            auto s = gen_identity_sample(id, g, FieldTag::Quaternion, 8, k);
            auto o = check_identity(id, s);
            if (!o.checked()) continue;
            ++checked;
            CHECK_MESSAGE(o.result.holds, identity_name(id), " failed over quaternions");
        }
        CHECK(checked == 200);
    }
}

TEST_CASE("commutative-only rows really fail over quaternions") {
    SplitMix64 g{999};
    long r9_fails = 0, c10_fails = 0;
    for (long k = 0; k < 120; ++k) {
        auto s9 = gen_identity_sample(IdentityId::R9, g, FieldTag::Quaternion, 8, k);
        auto o9 = check_identity(IdentityId::R9, s9);
        if (o9.checked() && !o9.result.holds) ++r9_fails;
        auto s10 = gen_identity_sample(IdentityId::C10, g, FieldTag::Quaternion, 8, k);
        auto o10 = check_identity(IdentityId::C10, s10);
        if (o10.checked() && !o10.result.holds) ++c10_fails;
    }
    CHECK(r9_fails > 0);
    CHECK(c10_fails > 0);
}

TEST_CASE("value-level restatement of C1") {
    SplitMix64 g{31415};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Quaternion}) {
        for (int t = 0; t < 40; ++t) {
            auto s = gen_identity_sample(IdentityId::C1, g, tag, 8, t);
            Scalar v = cr4(s[0], s[1], s[2], s[3]).finite();
            Scalar w = cr4(s[0], s[1], s[3], s[2]).finite();
            CHECK(v * w == Scalar::one(tag));
        }
    }
}

TEST_CASE("identity table metadata") {
    CHECK(all_identities().size() == kIdentityCount);
    CHECK(identity_from_name("C7") == IdentityId::C7);
    CHECK_FALSE(identity_from_name("C11").has_value());
    CHECK(identity_commutative_only(IdentityId::R9));
    CHECK(identity_commutative_only(IdentityId::C10));
    CHECK(identity_conditional(IdentityId::R5));
    CHECK(identity_arity(IdentityId::R1) == 2);
    CHECK(identity_arity(IdentityId::C0) == 4);
    CHECK(claimed_identities(FieldTag::Rational).size() == kIdentityCount);
    auto quat_ids = claimed_identities(FieldTag::Quaternion);
    CHECK(quat_ids.size() == 13);
}
