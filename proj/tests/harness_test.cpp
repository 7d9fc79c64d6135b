#include "doctest.h"

#include <set>

#include "crossline/harness.hpp"
#include "crossline/svg.hpp"

using namespace crossline;

namespace {

SuiteConfig cfg_of(SuiteId suite, FieldTag field, long samples, std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.field = field;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("generator determinism and bounds") {
    SplitMix64 a{99}, b{99};
    for (int t = 0; t < 20; ++t) CHECK(a.next() == b.next());

    SplitMix64 g1{7}, g2{7};
    CHECK(gen_scalar(g1, FieldTag::Quaternion, 10) == gen_scalar(g2, FieldTag::Quaternion, 10));

    // bound 1 forces rationals into {-1, 0, 1}.
    SplitMix64 g{5};
    std::set<std::string> seen;
    for (int t = 0; t < 60; ++t) seen.insert(format_scalar(gen_scalar(g, FieldTag::Rational, 1)));
    for (const auto& s : seen) CHECK((s == "-1" || s == "0" || s == "1"));

    CHECK(substream_seed(1, 2) != substream_seed(1, 3));
    CHECK(substream_seed(1, 2) == substream_seed(1, 2));
}

TEST_CASE("suite and mutation names round-trip") {
    for (SuiteId id : all_suites()) CHECK(suite_from_name(suite_name(id)) == id);
    CHECK_FALSE(suite_from_name("nonsense").has_value());
    for (Mutation m : {Mutation::None, Mutation::CrossRatioReordered, Mutation::DilationRightMul,
                       Mutation::InversionBothSided})
        CHECK(mutation_from_name(mutation_name(m)) == m);
}

TEST_CASE("every suite passes on every field") {
    for (SuiteId suite : all_suites()) {
        for (FieldTag field : {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion}) {
            SuiteReport r = run_suite(cfg_of(suite, field, 12, 2024));
            CHECK_MESSAGE(r.failed == 0, r.suite, " over ", r.field, ": ",
                          r.counterexample.dump());
            CHECK_FALSE(r.inconclusive());
            CHECK(r.passed + r.failed + r.skipped == r.run);
        }
    }
}

TEST_CASE("regression-pinned invariance report") {
    SuiteReport r = run_suite(cfg_of(SuiteId::Invariance, FieldTag::Rational, 100, 42));
    CHECK(r.run == 500); // 5 transform kinds x 100 samples
    CHECK(r.passed == 500);
    CHECK(r.failed == 0);
    CHECK(r.skipped == 0);
    CHECK(r.counterexample.is_null());
}

TEST_CASE("reports are deterministic and worker-independent") {
    for (SuiteId suite :
         {SuiteId::Desargues, SuiteId::IdentityCatalog, SuiteId::Preservation}) {
        SuiteConfig cfg = cfg_of(suite, FieldTag::Quaternion, 10, 77);
        SuiteReport one = run_suite(cfg);
        cfg.workers = 4;
        SuiteReport four = run_suite(cfg);
        CHECK(report_to_json(one) == report_to_json(four));
    }
}

TEST_CASE("report JSON schema") {
    SuiteReport r = run_suite(cfg_of(SuiteId::FieldAxioms, FieldTag::Gaussian, 5, 3));
    ordered_json j = ordered_json::parse(report_to_json(r));
    const char* keys[] = {"suite",  "field",   "seed",           "samples", "passed",
                          "failed", "skipped", "counterexample", "ms"};
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) CHECK(it.key() == keys[k]);
    CHECK(k == 9);
    CHECK(j["suite"] == "field-axioms");
    CHECK(j["samples"] == 5);
    CHECK(j["counterexample"].is_null());
    CHECK(j["ms"] == 0);
    CHECK(report_to_text(r).find("PASS") != std::string::npos);
}

TEST_CASE("mutation fixtures each produce quaternion counterexamples") {
    // Reordered cross-ratio brackets break the definitional decomposition C9.
    SuiteConfig cat = cfg_of(SuiteId::IdentityCatalog, FieldTag::Quaternion, 500, 7);
    cat.identities = {IdentityId::C9};
    cat.mutation = Mutation::CrossRatioReordered;
    SuiteReport r1 = run_suite(cat);
    CHECK(r1.failed >= 1);
    CHECK_FALSE(r1.counterexample.is_null());

    // Right-multiplication dilation breaks the induced-map law.
    SuiteConfig pres = cfg_of(SuiteId::Preservation, FieldTag::Quaternion, 500, 7);
    pres.transform_kinds = {"plane-dilation"};
    pres.mutation = Mutation::DilationRightMul;
    SuiteReport r2 = run_suite(pres);
    CHECK(r2.failed >= 1);

    // Both-sided inversion breaks invariance directly.
    SuiteConfig inv = cfg_of(SuiteId::Invariance, FieldTag::Quaternion, 100, 7);
    inv.transform_kinds = {"inversion"};
    inv.mutation = Mutation::InversionBothSided;
    SuiteReport r3 = run_suite(inv);
    CHECK(r3.failed >= 1);

    // The same configurations pass without the mutation.
    cat.mutation = Mutation::None;
    pres.mutation = Mutation::None;
    CHECK(run_suite(cat).failed == 0);
    CHECK(run_suite(pres).failed == 0);
}

TEST_CASE("unknown ids are errors") {
    SuiteConfig cfg = cfg_of(SuiteId::Invariance, FieldTag::Rational, 5, 1);
    cfg.transform_kinds = {"teleportation"};
    CHECK_THROWS_AS(run_suite(cfg), UnknownSuiteError);
    SuiteConfig zero = cfg_of(SuiteId::FieldAxioms, FieldTag::Rational, 0, 1);
    CHECK_THROWS_AS(run_suite(zero), Error);
    CHECK_THROWS_AS(conformance_report(1, 0), Error);
}

TEST_CASE("conformance report content") {
    ConformanceReport rep = conformance_report(5, 40);
    CHECK(rep.mul_order == std::string(kGeometricMulOrder));
    CHECK(rep.c0_resolution == std::string(kNegatedCrossRatioRhs));
    CHECK(rep.rows.size() == 3 * kIdentityCount);

    auto status_of = [&](const char* id, const char* field) -> const ConformanceRow& {
        for (const auto& row : rep.rows)
            if (row.identity == id && row.field == field) return row;
        throw std::runtime_error("row not found");
    };
    CHECK(status_of("R1", "rational").status == "holds");
    CHECK(status_of("C9", "quaternion").status == "holds");
    for (const char* id : {"C2", "C3", "C4", "C5"})
        CHECK(status_of(id, "quaternion").status == "holds");
    CHECK(status_of("R9", "quaternion").status == "fails");
    CHECK_FALSE(status_of("R9", "quaternion").counterexample.is_null());
    CHECK(status_of("C10", "quaternion").status == "fails");
    CHECK(status_of("R9", "rational").status == "holds");
    CHECK(status_of("C10", "gaussian").status == "holds");
    CHECK(status_of("R5", "rational").status == "conditional");
    CHECK(status_of("C7", "quaternion").status == "conditional");
    CHECK(status_of("C8", "quaternion").status == "conditional");

    // Determinism, byte for byte.
    CHECK(conformance_to_json(rep) == conformance_to_json(conformance_report(5, 40)));
    std::string text = conformance_to_text(rep);
    CHECK(text.find("label(A) * label(B)") != std::string::npos);
    CHECK(text.find("c_r(A,B;C,D)") != std::string::npos);
}

TEST_CASE("SVG emission") {
    LineFrame f = LineFrame::make(PlanePoint{Scalar(BigRational(0)), Scalar(BigRational(0))},
                                  PlanePoint{Scalar(BigRational(1)), Scalar(BigRational(0))});
    auto res = geometric_add(f, point_of(f, Scalar(BigRational(2))),
                             point_of(f, Scalar(BigRational(3))),
                             PlanePoint{Scalar(BigRational(0)), Scalar(BigRational(1))});
    std::string svg = trace_to_svg(res.trace);

    auto count = [&](const std::string& needle) {
        std::size_t n = 0, pos = 0;
        while ((pos = svg.find(needle, pos)) != std::string::npos) { ++n; pos += needle.size(); }
        return n;
    };
    CHECK(count("<circle") == 5);                 // A, B, B1, P1, C
    CHECK(count("<line class=\"aux\"") == 3);     // the three construction parallels
    CHECK(count("<line class=\"base\"") == 1);
    CHECK(count("<line class=\"tick\"") == 2);    // O and I
    CHECK(svg.find("viewBox") != std::string::npos);

    // Byte-stable across replays.
    auto res2 = geometric_add(f, point_of(f, Scalar(BigRational(2))),
                              point_of(f, Scalar(BigRational(3))),
                              PlanePoint{Scalar(BigRational(0)), Scalar(BigRational(1))});
    CHECK(trace_to_svg(res2.trace) == svg);

    // Degenerate multiplication trace (A = I) renders.
    auto deg = geometric_mul(f, f.unit, point_of(f, Scalar(BigRational(9))),
                             PlanePoint{Scalar(BigRational(0)), Scalar(BigRational(1))});
    CHECK(trace_to_svg(deg.trace).find("</svg>") != std::string::npos);

    // Non-rational traces are rejected.
    const Scalar z = Scalar::zero(FieldTag::Quaternion), o = Scalar::one(FieldTag::Quaternion);
    LineFrame qf = LineFrame::make(PlanePoint{z, z}, PlanePoint{o, z});
    auto qres = geometric_add(qf, qf.zero, qf.unit, default_aux_point(qf));
    CHECK_THROWS_AS(trace_to_svg(qres.trace), UnsupportedFieldError);
}

TEST_CASE("a suite with only skipped samples is inconclusive") {
    // bound 1 rationals take three values, so no distinct quadruple exists
    // and every C0 draw exhausts its rejection budget.
    SuiteConfig cfg = cfg_of(SuiteId::IdentityCatalog, FieldTag::Rational, 6, 3);
    cfg.bound = 1;
    cfg.identities = {IdentityId::C0};
    SuiteReport r = run_suite(cfg);
    CHECK(r.skipped == r.run);
    CHECK(r.inconclusive());
    CHECK(r.failed == 0);
    CHECK(report_to_text(r).find("INCONCLUSIVE") != std::string::npos);
}

TEST_CASE("desargues case option") {
    SuiteConfig cfg = cfg_of(SuiteId::Desargues, FieldTag::Rational, 8, 5);
    cfg.desargues_case = DesarguesCase::Parallel;
    CHECK(run_suite(cfg).failed == 0);
    cfg.desargues_case = DesarguesCase::Pencil;
    CHECK(run_suite(cfg).failed == 0);
}

TEST_CASE("identity subset selection") {
    SuiteConfig cfg = cfg_of(SuiteId::IdentityCatalog, FieldTag::Quaternion, 15, 5);
    cfg.identities = {IdentityId::C6, IdentityId::C7};
    SuiteReport r = run_suite(cfg);
    CHECK(r.run == 30);
    CHECK(r.failed == 0);
    CHECK(r.passed > 0);
}
