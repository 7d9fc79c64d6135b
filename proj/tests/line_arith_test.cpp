#include "doctest.h"

#include "crossline/line_arith.hpp"
#include "crossline/rng.hpp"

using namespace crossline;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar(BigRational(n, d)); }
PlanePoint rp(long long x, long long y) { return {rat(x), rat(y)}; }
Scalar quat(long long a, long long b, long long c, long long d) {
    return Scalar(RationalQuaternion{a, b, c, d});
}

LineFrame rational_unit_frame() { return LineFrame::make(rp(0, 0), rp(1, 0)); }

LineFrame random_frame(SplitMix64& g, FieldTag tag) {
    PlanePoint o{gen_scalar(g, tag, 6), gen_scalar(g, tag, 6)};
    for (;;) {
        PlanePoint i{gen_scalar(g, tag, 6), gen_scalar(g, tag, 6)};
        if (!(i == o)) return LineFrame::make(o, i);
    }
}

PlanePoint off_line(SplitMix64& g, const LineFrame& f) {
    for (;;) {
        PlanePoint p{gen_scalar(g, f.field(), 6), gen_scalar(g, f.field(), 6)};
        if (!on_line(p, f.line)) return p;
    }
}

} // namespace

TEST_CASE("label and point_of") {
    LineFrame diag = LineFrame::make(rp(0, 0), rp(1, 1));
    CHECK(label(diag, rp(0, 0)) == rat(0));
    CHECK(label(diag, rp(1, 1)) == rat(1));
    CHECK(label(diag, rp(3, 3)) == rat(3)); // solve X - O = x * (1,1)
    CHECK_THROWS_AS(label(diag, rp(1, 2)), IncidenceError);

    // Quaternion horizontal frame.
    const Scalar z = Scalar::zero(FieldTag::Quaternion), o = Scalar::one(FieldTag::Quaternion);
    LineFrame qf = LineFrame::make(PlanePoint{z, z}, PlanePoint{o, z});
    CHECK(point_of(qf, quat(0, 1, 0, 0)) == PlanePoint{quat(0, 1, 0, 0), z});

    SplitMix64 g{19};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        for (int t = 0; t < 25; ++t) {
            LineFrame f = random_frame(g, tag);
            Scalar x = gen_scalar(g, tag, 9);
            CHECK(label(f, point_of(f, x)) == x); // label . point_of = id
        }
    }
    CHECK_THROWS_AS(LineFrame::make(rp(2, 2), rp(2, 2)), DegeneratePairError);
}

TEST_CASE("geometric addition oracle cases") {
    LineFrame f = rational_unit_frame();
    auto res = geometric_add(f, point_of(f, rat(2)), point_of(f, rat(3)), rp(0, 1));
    CHECK(label(f, res.point) == rat(5)); // compared against scalar add

    // A = O: the trace shows P1 = B1 and C = B.
    auto idres = geometric_add(f, f.zero, point_of(f, rat(3)), rp(0, 1));
    CHECK(idres.point == point_of(f, rat(3)));
    CHECK(idres.trace.find("P1")->point() == idres.trace.find("B1")->point());

    CHECK_THROWS_AS(geometric_add(f, f.zero, f.unit, rp(4, 0)), AuxiliaryPointError);
    CHECK_THROWS_AS(geometric_add(f, rp(0, 2), f.unit, rp(0, 1)), IncidenceError);
}

TEST_CASE("geometric multiplication oracle cases") {
    LineFrame f = rational_unit_frame();
    auto res = geometric_mul(f, point_of(f, rat(2)), point_of(f, rat(3)), rp(0, 1));
    CHECK(label(f, res.point) == rat(6));

    // Identity element on both sides.
    CHECK(geometric_mul(f, f.unit, point_of(f, rat(9)), rp(0, 1)).point == point_of(f, rat(9)));
    CHECK(geometric_mul(f, point_of(f, rat(9)), f.unit, rp(0, 1)).point == point_of(f, rat(9)));
    // A = I makes P1 = B1.
    auto idres = geometric_mul(f, f.unit, point_of(f, rat(9)), rp(0, 1));
    CHECK(idres.trace.find("P1")->point() == idres.trace.find("B1")->point());
    // Annihilator.
    CHECK(geometric_mul(f, f.zero, point_of(f, rat(7)), rp(0, 1)).point == f.zero);
}

TEST_CASE("multiplication factor order resolution") {
    // The construction over quaternion labels (i, j) must land on
    // i*j = k for every auxiliary choice; j*i = -k would mean the
    // opposite order. This pins the frozen constant.
    const FieldTag tag = FieldTag::Quaternion;
    const Scalar z = Scalar::zero(tag), o = Scalar::one(tag);
    LineFrame f = LineFrame::make(PlanePoint{z, z}, PlanePoint{o, z});
    Scalar li = quat(0, 1, 0, 0), lj = quat(0, 0, 1, 0), lk = quat(0, 0, 0, 1);

    SplitMix64 g{123};
    for (int t = 0; t < 5; ++t) {
        PlanePoint aux = off_line(g, f);
        Scalar got = label(f, geometric_mul(f, point_of(f, li), point_of(f, lj), aux).point);
        CHECK(got == li * lj);
        CHECK(got == lk);
        CHECK(got != lj * li);
    }
}

TEST_CASE("agreement with scalar arithmetic on random frames") {
    SplitMix64 g{7};
    for (FieldTag tag : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
        for (int t = 0; t < 30; ++t) {
            LineFrame f = random_frame(g, tag);
            Scalar a = gen_scalar(g, tag, 6);
            Scalar b = gen_scalar(g, tag, 6);
            PlanePoint A = point_of(f, a), B = point_of(f, b);
            PlanePoint aux = off_line(g, f);
            CHECK(label(f, geometric_add(f, A, B, aux).point) == a + b);
            CHECK(label(f, geometric_mul(f, A, B, aux).point) == a * b);
        }
    }
}

TEST_CASE("auxiliary independence") {
    SplitMix64 g{8};
    const FieldTag tag = FieldTag::Quaternion;
    const Scalar z = Scalar::zero(tag), o = Scalar::one(tag);
    LineFrame f = LineFrame::make(PlanePoint{z, z}, PlanePoint{o, z});
    Scalar a = quat(0, 1, 0, 0), b = quat(0, 0, 1, 0);
    PlanePoint A = point_of(f, a), B = point_of(f, b);

    PlanePoint first_add = geometric_add(f, A, B, off_line(g, f)).point;
    PlanePoint first_mul = geometric_mul(f, A, B, off_line(g, f)).point;
    CHECK(label(f, first_add) == a + b);
    for (int t = 0; t < 5; ++t) {
        PlanePoint aux = off_line(g, f);
        CHECK(geometric_add(f, A, B, aux).point == first_add);
        CHECK(geometric_mul(f, A, B, aux).point == first_mul);
    }
}

TEST_CASE("default auxiliary point") {
    LineFrame f = rational_unit_frame();
    CHECK(default_aux_point(f) == rp(0, 1)); // off the horizontal line

    LineFrame vertical = LineFrame::make(rp(0, 0), rp(0, 1));
    CHECK(default_aux_point(vertical) == rp(1, 1)); // (0,1)-offset is on the line

    auto res = geometric_add(f, point_of(f, rat(2)), point_of(f, rat(3)));
    CHECK(label(f, res.point) == rat(5));
}

TEST_CASE("traces replay and serialize") {
    LineFrame f = rational_unit_frame();
    auto res = geometric_add(f, point_of(f, rat(2)), point_of(f, rat(3)), rp(0, 1));
    CHECK(replay_trace(res.trace) == res.point);

    std::string doc = trace_to_json(res.trace);
    ConstructionTrace round = trace_from_json(doc);
    CHECK(round.result == res.trace.result);
    CHECK(round.steps.size() == res.trace.steps.size());
    CHECK(replay_trace(round) == res.point);
    CHECK(trace_to_json(round) == doc); // byte-stable round trip

    // Step layout: three construction lines plus the base, three
    // constructed points plus the frame and the two inputs.
    int lines = 0, points = 0;
    for (const auto& s : res.trace.steps) (s.is_point() ? points : lines)++;
    CHECK(lines == 4);
    CHECK(points == 7);

    // Tampering with a recorded object breaks the replay.
    ConstructionTrace bad = res.trace;
    for (auto& s : bad.steps)
        if (s.id == "P1") s.object = rp(9, 9);
    CHECK_THROWS_AS(replay_trace(bad), Error);

    // Quaternion traces replay as well.
    SplitMix64 g{55};
    const Scalar z = Scalar::zero(FieldTag::Quaternion), o = Scalar::one(FieldTag::Quaternion);
    LineFrame qf = LineFrame::make(PlanePoint{z, z}, PlanePoint{o, z});
    auto qres = geometric_mul(qf, point_of(qf, quat(0, 1, 0, 0)), point_of(qf, quat(0, 0, 1, 0)),
                              off_line(g, qf));
    CHECK(replay_trace(qres.trace) == qres.point);
    CHECK(trace_from_json(trace_to_json(qres.trace)).result == qres.point);
}
