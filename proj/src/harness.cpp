#include "crossline/harness.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace crossline {

namespace {

struct SuiteNameEntry {
    SuiteId id;
    const char* name;
};

constexpr SuiteNameEntry kSuiteNames[] = {
    {SuiteId::FieldAxioms, "field-axioms"},
    {SuiteId::PlaneAxioms, "plane-axioms"},
    {SuiteId::Desargues, "desargues"},
    {SuiteId::LineArithAgreement, "line-arith-agreement"},
    {SuiteId::AuxIndependence, "aux-independence"},
    {SuiteId::IdentityCatalog, "identity-catalog"},
    {SuiteId::Invariance, "invariance"},
    {SuiteId::Preservation, "preservation"},
    {SuiteId::MobiusNormalization, "mobius-normalization"},
    {SuiteId::Composition, "composition"},
};

} // namespace

const char* suite_name(SuiteId id) {
    for (const auto& e : kSuiteNames)
        if (e.id == id) return e.name;
    return "?";
}

std::optional<SuiteId> suite_from_name(std::string_view name) {
    for (const auto& e : kSuiteNames)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::vector<SuiteId> all_suites() {
    std::vector<SuiteId> out;
    for (const auto& e : kSuiteNames) out.push_back(e.id);
    return out;
}

const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::None: return "none";
        case Mutation::CrossRatioReordered: return "cr-reorder";
        case Mutation::DilationRightMul: return "dilation-right";
        case Mutation::InversionBothSided: return "inversion-both-sided";
    }
    return "?";
}

std::optional<Mutation> mutation_from_name(std::string_view name) {
    for (Mutation m : {Mutation::None, Mutation::CrossRatioReordered, Mutation::DilationRightMul,
                       Mutation::InversionBothSided})
        if (name == mutation_name(m)) return m;
    return std::nullopt;
}

ExtendedScalar cross_ratio_reordered(const CrossRatioInput& in) {
    if (in.a.is_infinity() || in.b.is_infinity() || in.c.is_infinity() || in.d.is_infinity())
        return cross_ratio(in); // single-bracket slot formulas have no order to corrupt
    const Scalar &a = in.a.finite(), &b = in.b.finite(), &c = in.c.finite(), &d = in.d.finite();
    if (a == d) throw AdmissibilityError("A != D violated");
    if (b == c) throw AdmissibilityError("B != C violated");
    return (inv(b - c) * (a - c)) * (inv(a - d) * (b - d));
}

const std::vector<std::string>& invariance_kinds() {
    static const std::vector<std::string> kinds{
        "inversion", "reflection", "natural-translation", "natural-dilation", "mobius"};
    return kinds;
}

const std::vector<std::string>& preservation_kinds() {
    static const std::vector<std::string> kinds{
        "plane-translation", "plane-dilation", "projection-parallel", "projection-skew"};
    return kinds;
}

// ----------------------------------------------------------------- engine

namespace {

struct SampleResult {
    enum class Kind { Pass, Fail, Skip };
    Kind kind = Kind::Pass;
    ordered_json detail;
    std::string reason;

    static SampleResult pass() { return {}; }
    static SampleResult fail(ordered_json d) {
        return {Kind::Fail, std::move(d), {}};
    }
    static SampleResult skip(std::string why) {
        return {Kind::Skip, nullptr, std::move(why)};
    }
};

ordered_json scalar_list(std::span<const Scalar> v) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : v) arr.push_back(format_scalar(s));
    return arr;
}

SuiteReport run_engine(const SuiteConfig& cfg, long total,
                       const std::function<SampleResult(long)>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto guarded = [&](long i) -> SampleResult {
        try {
            return fn(i);
        } catch (const GenerationError& e) {
            return SampleResult::skip(e.what());
        } catch (const Error& e) {
            return SampleResult::fail({{"sample", i}, {"error", e.what()}});
        } catch (const std::exception& e) {
            return SampleResult::fail({{"sample", i}, {"error", e.what()}});
        }
    };

    std::vector<SampleResult> results(static_cast<std::size_t>(total));
    int workers = std::max(1, cfg.workers);
    if (workers == 1 || total < 2) {
        for (long i = 0; i < total; ++i) results[static_cast<std::size_t>(i)] = guarded(i);
    } else {
        std::atomic<long> next{0};
        auto drain = [&] {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= total) return;
                results[static_cast<std::size_t>(i)] = guarded(i);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    SuiteReport r;
    r.suite = suite_name(cfg.suite);
    r.field = field_name(cfg.field);
    r.seed = cfg.seed;
    r.run = total;
    r.counterexample = nullptr;
    for (const auto& s : results) {
        switch (s.kind) {
            case SampleResult::Kind::Pass: ++r.passed; break;
            case SampleResult::Kind::Fail:
                ++r.failed;
                if (r.counterexample.is_null()) r.counterexample = s.detail;
                break;
            case SampleResult::Kind::Skip: ++r.skipped; break;
        }
    }
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count();
    return r;
}

// ----------------------------------------------------------------- suites

PlanePoint gen_plane_point(SplitMix64& g, FieldTag tag, std::int64_t bound) {
    Scalar x = gen_scalar(g, tag, bound);
    Scalar y = gen_scalar(g, tag, bound);
    return {std::move(x), std::move(y)};
}

PlanePoint gen_off_line(SplitMix64& g, const PlaneLine& l, FieldTag tag, std::int64_t bound) {
    for (int t = 0; t < kMaxRejects; ++t) {
        PlanePoint p = gen_plane_point(g, tag, bound);
        if (!on_line(p, l)) return p;
    }
    throw GenerationError("point off a line");
}

LineFrame gen_frame(SplitMix64& g, FieldTag tag, std::int64_t bound) {
    PlanePoint o = gen_plane_point(g, tag, bound);
    for (int t = 0; t < kMaxRejects; ++t) {
        PlanePoint i = gen_plane_point(g, tag, bound);
        if (!(i == o)) return LineFrame::make(o, i);
    }
    throw GenerationError("line frame");
}

std::array<Scalar, 4> gen_admissible_tuple(SplitMix64& g, FieldTag tag, std::int64_t bound) {
    for (int t = 0; t < kMaxRejects; ++t) {
        std::array<Scalar, 4> v{gen_scalar(g, tag, bound), gen_scalar(g, tag, bound),
                                gen_scalar(g, tag, bound), gen_scalar(g, tag, bound)};
        if (v[0] != v[3] && v[1] != v[2]) return v;
    }
    throw GenerationError("admissible tuple");
}

SampleResult field_axioms_sample(const SuiteConfig& cfg, long idx) {
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;
    Scalar a = gen_scalar(g, tag, cfg.bound);
    Scalar b = gen_scalar(g, tag, cfg.bound);
    Scalar c = gen_scalar(g, tag, cfg.bound);
    const Scalar zero = Scalar::zero(tag), one = Scalar::one(tag);
    const Scalar minus_one = -one;

    auto fail = [&](const char* law) {
        return SampleResult::fail(
            {{"sample", idx}, {"law", law}, {"inputs", scalar_list(std::array{a, b, c})}});
    };

    if ((a + b) + c != a + (b + c)) return fail("additive associativity");
    if ((a * b) * c != a * (b * c)) return fail("multiplicative associativity");
    if (a * (b + c) != a * b + a * c) return fail("left distributivity");
    if ((a + b) * c != a * c + b * c) return fail("right distributivity");
    if (a + zero != a || zero + a != a) return fail("additive identity");
    if (a * one != a || one * a != a) return fail("multiplicative identity");
    if (a + (-a) != zero) return fail("additive inverse");
    if (zero == one) return fail("O distinct from I");
    if (!a.is_zero()) {
        if (a * inv(a) != one || inv(a) * a != one) return fail("multiplicative inverse");
        if (inv(inv(a)) != a) return fail("inverse involution");
    }
    if (minus_one * minus_one != one) return fail("(-I)(-I) = I");
    if (inv(minus_one) != minus_one) return fail("(-I)^-1 = -I");
    if (is_commutative(tag)) {
        if (a * b != b * a) return fail("commutativity");
    } else {
        const Scalar qi{RationalQuaternion{0, 1, 0, 0}};
        const Scalar qj{RationalQuaternion{0, 0, 1, 0}};
        const Scalar qk{RationalQuaternion{0, 0, 0, 1}};
        if (qi * qj == qj * qi) return fail("noncommutativity witness");
        if (qi * qj != qk || qj * qi != -qk) return fail("defining relations ij = k = -ji");
    }
    return SampleResult::pass();
}

SampleResult plane_axioms_sample(const SuiteConfig& cfg, long idx) {
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;
    auto fail = [&](const char* what) {
        return SampleResult::fail({{"sample", idx}, {"axiom", what}});
    };

    PlanePoint p = gen_plane_point(g, tag, cfg.bound);
    PlanePoint q = gen_plane_point(g, tag, cfg.bound);
    for (int t = 0; t < kMaxRejects && q == p; ++t) q = gen_plane_point(g, tag, cfg.bound);
    if (q == p) return SampleResult::skip("coincident draws");

    PlaneLine l = line_through(p, q);
    if (!on_line(p, l) || !on_line(q, l)) return fail("joined line contains its points");
    if (!(line_through(q, p) == l)) return fail("join independent of argument order");

    PlanePoint r = gen_plane_point(g, tag, cfg.bound);
    PlaneLine lp = parallel_through(l, r);
    if (!(lp.dir == l.dir) || !on_line(r, lp)) return fail("Playfair parallel exists");
    if (!(PlaneLine{r, l.dir} == lp)) return fail("Playfair parallel unique");
    if (on_line(r, l)) {
        if (!(lp == l)) return fail("parallel through incident point is the line");
    } else if (!std::holds_alternative<ParallelOutcome>(intersect(l, lp))) {
        return fail("strict parallel has empty intersection");
    }

    PlanePoint s = gen_plane_point(g, tag, cfg.bound);
    PlanePoint u = gen_plane_point(g, tag, cfg.bound);
    if (!(s == u)) {
        PlaneLine m = line_through(s, u);
        if (!(m.dir == l.dir)) {
            auto x = intersect(l, m);
            if (!std::holds_alternative<PlanePoint>(x)) return fail("nonparallel lines meet");
            const auto& pt = std::get<PlanePoint>(x);
            if (!on_line(pt, l) || !on_line(pt, m)) return fail("intersection incident to both");
            auto x2 = intersect(m, l);
            if (!(std::get<PlanePoint>(x2) == pt)) return fail("intersection symmetric");
        }
    }

    const Scalar z = Scalar::zero(tag), o = Scalar::one(tag);
    const std::array<PlanePoint, 3> witness{PlanePoint{z, z}, PlanePoint{o, z}, PlanePoint{z, o}};
    if (collinear(witness)) return fail("three non-collinear points exist");
    return SampleResult::pass();
}

SampleResult desargues_sample(const SuiteConfig& cfg, long idx) {
    DesarguesCase shape = cfg.desargues_case
                              ? *cfg.desargues_case
                              : (idx % 2 == 0 ? DesarguesCase::Parallel : DesarguesCase::Pencil);
    DesarguesConfig dc = random_desargues_config(substream_seed(cfg.seed, static_cast<std::uint64_t>(idx)),
                                                 cfg.field, shape);
    if (desargues_check(dc)) return SampleResult::pass();
    return SampleResult::fail(
        {{"sample", idx},
         {"case", shape == DesarguesCase::Parallel ? "parallel" : "pencil"},
         {"A", format_point(dc.A)},
         {"B", format_point(dc.B)},
         {"C", format_point(dc.C)},
         {"A1", format_point(dc.A1)},
         {"B1", format_point(dc.B1)},
         {"C1", format_point(dc.C1)}});
}

SampleResult line_arith_sample(const SuiteConfig& cfg, long idx) {
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;
    LineFrame frame = gen_frame(g, tag, cfg.bound);
    Scalar a = idx % 7 == 0 ? Scalar::zero(tag) : gen_scalar(g, tag, cfg.bound);
    Scalar b = idx % 11 == 0 ? Scalar::one(tag) : gen_scalar(g, tag, cfg.bound);
    PlanePoint A = point_of(frame, a);
    PlanePoint B = point_of(frame, b);
    std::optional<PlanePoint> aux;
    if (idx % 3 != 0) aux = gen_off_line(g, frame.line, tag, cfg.bound);

    auto fail = [&](const char* what, const Scalar& got, const Scalar& expect) {
        return SampleResult::fail({{"sample", idx},
                                   {"check", what},
                                   {"a", format_scalar(a)},
                                   {"b", format_scalar(b)},
                                   {"got", format_scalar(got)},
                                   {"expected", format_scalar(expect)}});
    };

    auto sum = geometric_add(frame, A, B, aux);
    Scalar sum_label = label(frame, sum.point);
    if (sum_label != a + b) return fail("geometric addition agrees", sum_label, a + b);
    replay_trace(sum.trace);

    auto prod = geometric_mul(frame, A, B, aux);
    Scalar prod_label = label(frame, prod.point);
    if (prod_label != a * b) return fail("geometric multiplication agrees", prod_label, a * b);
    replay_trace(prod.trace);
    return SampleResult::pass();
}

SampleResult aux_independence_sample(const SuiteConfig& cfg, long idx) {
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;
    LineFrame frame = gen_frame(g, tag, cfg.bound);
    Scalar a = gen_scalar(g, tag, cfg.bound);
    Scalar b = gen_scalar(g, tag, cfg.bound);
    PlanePoint A = point_of(frame, a);
    PlanePoint B = point_of(frame, b);

    std::vector<PlanePoint> auxes;
    for (int t = 0; t < kMaxRejects && auxes.size() < 5; ++t) {
        PlanePoint c = gen_plane_point(g, tag, cfg.bound);
        if (on_line(c, frame.line)) continue;
        bool dup = false;
        for (const auto& seen : auxes) dup = dup || seen == c;
        if (!dup) auxes.push_back(c);
    }
    if (auxes.size() < 5) return SampleResult::skip("not enough auxiliary points");

    PlanePoint sum0 = geometric_add(frame, A, B, auxes[0]).point;
    PlanePoint prod0 = geometric_mul(frame, A, B, auxes[0]).point;
    for (std::size_t i = 1; i < auxes.size(); ++i) {
        if (!(geometric_add(frame, A, B, auxes[i]).point == sum0))
            return SampleResult::fail({{"sample", idx},
                                       {"check", "addition independent of B1"},
                                       {"a", format_scalar(a)},
                                       {"b", format_scalar(b)},
                                       {"aux", format_point(auxes[i])}});
        if (!(geometric_mul(frame, A, B, auxes[i]).point == prod0))
            return SampleResult::fail({{"sample", idx},
                                       {"check", "multiplication independent of B1"},
                                       {"a", format_scalar(a)},
                                       {"b", format_scalar(b)},
                                       {"aux", format_point(auxes[i])}});
    }
    return SampleResult::pass();
}

SampleResult identity_sample(const SuiteConfig& cfg, const std::vector<IdentityId>& ids,
                             long idx) {
    const long per = cfg.samples;
    IdentityId id = ids[static_cast<std::size_t>(idx / per)];
    long k = idx % per;
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    CrossRatioFn cr =
        cfg.mutation == Mutation::CrossRatioReordered ? cross_ratio_reordered : cross_ratio;

    std::vector<Scalar> sample = gen_identity_sample(id, g, cfg.field, cfg.bound, k);
    IdentityOutcome outcome = check_identity(id, sample, cr);
    if (!outcome.checked()) return SampleResult::skip(outcome.skip_reason);
    if (outcome.result.holds) return SampleResult::pass();
    return SampleResult::fail({{"sample", idx},
                               {"identity", identity_name(id)},
                               {"inputs", scalar_list(sample)},
                               {"lhs", format_extended(outcome.result.lhs)},
                               {"rhs", format_extended(outcome.result.rhs)}});
}

SampleResult invariance_sample(const SuiteConfig& cfg, const std::vector<std::string>& kinds,
                               long idx) {
    const long per = cfg.samples;
    const std::string& kind = kinds[static_cast<std::size_t>(idx / per)];
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;

    auto fail = [&](std::span<const Scalar> tuple, const ExtendedScalar& before,
                    const ExtendedScalar& after) {
        return SampleResult::fail({{"sample", idx},
                                   {"kind", kind},
                                   {"tuple", scalar_list(tuple)},
                                   {"cross_ratio", format_extended(before)},
                                   {"after", format_extended(after)}});
    };

    if (kind == "mobius") {
        // The Moebius theorem is about the tuple (A, B, C, D) whose last
        // three entries are the transform parameters: its image is
        // (mu(A), I, O, inf) and the infinite-slot formula collapses back
        // to mu(A). Over a noncommutative field the map does not preserve
        // the cross-ratio of unrelated tuples.
        Scalar B = gen_scalar(g, tag, cfg.bound), C = B, D = B;
        for (int t = 0; t < kMaxRejects && (B == C || B == D || C == D); ++t) {
            C = gen_scalar(g, tag, cfg.bound);
            D = gen_scalar(g, tag, cfg.bound);
        }
        if (B == C || B == D || C == D) return SampleResult::skip("Moebius parameters");
        LineTransform t = make_mobius(B, C, D);

        Scalar A = gen_scalar(g, tag, cfg.bound);
        for (int t2 = 0; t2 < kMaxRejects && A == D; ++t2) A = gen_scalar(g, tag, cfg.bound);
        if (A == D) return SampleResult::skip("tuple head");
        std::array<Scalar, 4> tuple{A, B, C, D};
        auto in = CrossRatioInput::of_scalars(tuple[0], tuple[1], tuple[2], tuple[3]);
        ExtendedScalar before = cross_ratio(in);
        ExtendedScalar after = cr_after(t, in);
        if (after != before) return fail(tuple, before, after);

        if (is_commutative(tag)) {
            // Classical strengthening: over a field the map preserves the
            // cross-ratio of arbitrary admissible tuples. At most one entry
            // may hit D, the pole of the map.
            std::array<Scalar, 4> any{};
            for (int t2 = 0; t2 < kMaxRejects; ++t2) {
                any = gen_admissible_tuple(g, tag, cfg.bound);
                int hits = 0;
                for (const auto& x : any) hits += x == D ? 1 : 0;
                if (hits <= 1) break;
            }
            auto in2 = CrossRatioInput::of_scalars(any[0], any[1], any[2], any[3]);
            ExtendedScalar before2 = cross_ratio(in2);
            ExtendedScalar after2 = cr_after(t, in2);
            if (after2 != before2) return fail(any, before2, after2);
        }
        return SampleResult::pass();
    }

    std::array<Scalar, 4> tuple = gen_admissible_tuple(g, tag, cfg.bound);
    auto in = CrossRatioInput::of_scalars(tuple[0], tuple[1], tuple[2], tuple[3]);
    ExtendedScalar before = cross_ratio(in);

    if (kind == "inversion") {
        Scalar p = gen_nonzero(g, tag, cfg.bound);
        if (cfg.mutation == Mutation::InversionBothSided) {
            ExtendedScalar after = cross_ratio(CrossRatioInput::of_scalars(
                p * tuple[0] * p, p * tuple[1] * p, p * tuple[2] * p, p * tuple[3] * p));
            if (after != before) return fail(tuple, before, after);
            return SampleResult::pass();
        }
        ExtendedScalar after = cr_after(make_inversion(p), in);
        if (after != before) return fail(tuple, before, after);
        return SampleResult::pass();
    }
    if (kind == "reflection") {
        LineTransform t{Reflection{}};
        LineTransform minus = make_inversion(-Scalar::one(tag));
        for (const auto& x : tuple)
            if (apply_line_transform(t, x) != apply_line_transform(minus, x))
                return SampleResult::fail({{"sample", idx},
                                           {"kind", kind},
                                           {"check", "reflection equals inversion by -I"},
                                           {"x", format_scalar(x)}});
        ExtendedScalar after = cr_after(t, in);
        if (after != before) return fail(tuple, before, after);
        return SampleResult::pass();
    }
    if (kind == "natural-translation") {
        ExtendedScalar after = cr_after(NaturalTranslation{gen_scalar(g, tag, cfg.bound)}, in);
        if (after != before) return fail(tuple, before, after);
        return SampleResult::pass();
    }
    if (kind == "natural-dilation") {
        long long n = 0;
        while (n == 0) n = uniform_int(g, -5, 5);
        ExtendedScalar after = cr_after(make_natural_dilation(n), in);
        if (after != before) return fail(tuple, before, after);
        return SampleResult::pass();
    }
    throw UnknownSuiteError("invariance kind " + kind);
}

SampleResult mobius_normalization_sample(const SuiteConfig& cfg, long idx) {
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;
    Scalar B = gen_scalar(g, tag, cfg.bound), C = B, D = B;
    for (int t = 0; t < kMaxRejects && (B == C || B == D || C == D); ++t) {
        C = gen_scalar(g, tag, cfg.bound);
        D = gen_scalar(g, tag, cfg.bound);
    }
    if (B == C || B == D || C == D) return SampleResult::skip("Moebius parameters");
    LineTransform t = make_mobius(B, C, D);

    auto fail = [&](const char* slot, const ExtendedScalar& got) {
        return SampleResult::fail({{"sample", idx},
                                   {"slot", slot},
                                   {"B", format_scalar(B)},
                                   {"C", format_scalar(C)},
                                   {"D", format_scalar(D)},
                                   {"got", format_extended(got)}});
    };
    ExtendedScalar at_b = apply_line_transform(t, ExtendedScalar(B));
    if (at_b != ExtendedScalar(Scalar::one(tag))) return fail("mu(B) = I", at_b);
    ExtendedScalar at_c = apply_line_transform(t, ExtendedScalar(C));
    if (at_c != ExtendedScalar(Scalar::zero(tag))) return fail("mu(C) = O", at_c);
    ExtendedScalar at_d = apply_line_transform(t, ExtendedScalar(D));
    if (at_d != ExtendedScalar::infinity(tag)) return fail("mu(D) = inf", at_d);
    return SampleResult::pass();
}

SampleResult preservation_sample(const SuiteConfig& cfg, const std::vector<std::string>& kinds,
                                 long idx) {
    const long per = cfg.samples;
    const std::string& kind = kinds[static_cast<std::size_t>(idx / per)];
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;

    LineFrame frame = gen_frame(g, tag, cfg.bound);
    std::array<Scalar, 4> labels = gen_admissible_tuple(g, tag, cfg.bound);
    std::array<PlanePoint, 4> points{point_of(frame, labels[0]), point_of(frame, labels[1]),
                                     point_of(frame, labels[2]), point_of(frame, labels[3])};

    auto fail = [&](const char* what, ordered_json extra = ordered_json::object()) {
        ordered_json d{{"sample", idx}, {"kind", kind}, {"check", what},
                       {"labels", scalar_list(labels)}};
        for (auto& [key, value] : extra.items()) d[key] = value;
        return SampleResult::fail(std::move(d));
    };

    TransportedFrame tf{frame, frame, nullptr};
    bool dir_must_match = false;
    std::optional<Scalar> dilation_factor;

    if (kind == "plane-translation") {
        PlaneCollineation phi = Translation{gen_plane_point(g, tag, cfg.bound)};
        if (!(image_line(phi, frame.line).dir == frame.line.dir))
            return fail("image line direction preserved");
        tf = transport_frame(phi, frame);
        dir_must_match = true;
    } else if (kind == "plane-dilation") {
        Scalar lam = gen_nonzero(g, tag, cfg.bound);
        PlanePoint c = gen_plane_point(g, tag, cfg.bound);
        if (cfg.mutation == Mutation::DilationRightMul) {
            tf = transport_frame_fn(
                [lam, c](const PlanePoint& p) {
                    return PlanePoint{p.x * lam + c.x, p.y * lam + c.y};
                },
                frame);
        } else {
            PlaneCollineation phi = Dilation{lam, c};
            if (!(image_line(phi, frame.line).dir == frame.line.dir))
                return fail("image line direction preserved");
            tf = transport_frame(phi, frame);
        }
        dir_must_match = true;
        dilation_factor = lam;
    } else if (kind == "projection-parallel" || kind == "projection-skew") {
        PlaneLine target = frame.line;
        if (kind == "projection-parallel") {
            PlanePoint r = gen_off_line(g, frame.line, tag, cfg.bound);
            target = parallel_through(frame.line, r);
        } else {
            bool found = false;
            for (int t = 0; t < kMaxRejects && !found; ++t) {
                PlanePoint s = gen_plane_point(g, tag, cfg.bound);
                PlanePoint u = gen_plane_point(g, tag, cfg.bound);
                if (s == u) continue;
                PlaneLine cand = line_through(s, u);
                if (cand.dir == frame.line.dir) continue;
                target = cand;
                found = true;
            }
            if (!found) return SampleResult::skip("skew target line");
        }
        Direction dir = frame.line.dir;
        bool found = false;
        for (int t = 0; t < kMaxRejects && !found; ++t) {
            PlanePoint v = gen_plane_point(g, tag, cfg.bound);
            if (v.x.is_zero() && v.y.is_zero()) continue;
            Direction cand = Direction::of_vector(v);
            if (cand == frame.line.dir || cand == target.dir) continue;
            dir = cand;
            found = true;
        }
        if (!found) return SampleResult::skip("projection direction");
        ParallelProjection proj = make_parallel_projection(frame.line, target, dir);

        PlanePoint q = project(proj, points[0]);
        if (!on_line(q, proj.target)) return fail("projection lands on target");
        if (!(q == points[0]) && !(line_through(points[0], q).dir == proj.dir))
            return fail("projection moves along its direction");
        tf = transport_frame(proj, frame);
    } else {
        throw UnknownSuiteError("preservation kind " + kind);
    }

    if (!cr_preserved(tf, points)) {
        ExtendedScalar v =
            cross_ratio(CrossRatioInput::of_scalars(labels[0], labels[1], labels[2], labels[3]));
        return fail("cross-ratio preserved", {{"cross_ratio", format_extended(v)}});
    }

    // Induced-map laws.
    Scalar x = gen_scalar(g, tag, cfg.bound);
    Scalar y = gen_scalar(g, tag, cfg.bound);
    Scalar kx = tf.kappa(x);
    if (tf.kappa(x + y) != kx + tf.kappa(y)) return fail("kappa additive", {{"x", format_scalar(x)}});
    if (tf.kappa(x * y) != kx * tf.kappa(y))
        return fail("kappa multiplicative", {{"x", format_scalar(x)}});
    if (dilation_factor) {
        if (kx != *dilation_factor * x * inv(*dilation_factor))
            return fail("kappa is the inner automorphism of the factor",
                        {{"x", format_scalar(x)},
                         {"kappa", format_scalar(kx)},
                         {"factor", format_scalar(*dilation_factor)}});
    } else if (kx != x) {
        return fail("kappa is the identity", {{"x", format_scalar(x)}});
    }
    if (dir_must_match && !(tf.image.line.dir == frame.line.dir))
        return fail("transported line direction preserved");
    return SampleResult::pass();
}

SampleResult composition_sample(const SuiteConfig& cfg, long idx) {
    SplitMix64 g{substream_seed(cfg.seed, static_cast<std::uint64_t>(idx))};
    const FieldTag tag = cfg.field;
    auto fail = [&](const char* what) {
        return SampleResult::fail({{"sample", idx}, {"check", what}});
    };

    Translation t1{gen_plane_point(g, tag, cfg.bound)};
    Translation t2{gen_plane_point(g, tag, cfg.bound)};
    PlaneCollineation ct = compose(PlaneCollineation{t2}, PlaneCollineation{t1});
    const auto* tr = std::get_if<Translation>(&ct);
    if (!tr || !(tr->offset == t1.offset + t2.offset))
        return fail("translation composition is the vector sum");
    for (int r = 0; r < 2; ++r) {
        PlanePoint p = gen_plane_point(g, tag, cfg.bound);
        if (!(apply_collineation(ct, p) ==
              apply_collineation(PlaneCollineation{t2}, apply_collineation(PlaneCollineation{t1}, p))))
            return fail("translation composition pointwise");
    }

    Scalar l1 = gen_nonzero(g, tag, cfg.bound);
    Scalar l2 = gen_nonzero(g, tag, cfg.bound);
    Dilation d1{l1, gen_plane_point(g, tag, cfg.bound)};
    Dilation d2{l2, gen_plane_point(g, tag, cfg.bound)};
    PlaneCollineation cd = compose(PlaneCollineation{d2}, PlaneCollineation{d1});
    for (int r = 0; r < 2; ++r) {
        PlanePoint p = gen_plane_point(g, tag, cfg.bound);
        if (!(apply_collineation(cd, p) ==
              apply_collineation(PlaneCollineation{d2}, apply_collineation(PlaneCollineation{d1}, p))))
            return fail("dilation composition pointwise");
    }
    PlanePoint expect_offset = l2 * d1.offset + d2.offset;
    if (const auto* dd = std::get_if<Dilation>(&cd)) {
        if (dd->factor != l2 * l1) return fail("dilation composition factor");
        if (!(dd->offset == expect_offset)) return fail("dilation composition offset");
    } else {
        if (l2 * l1 != Scalar::one(tag)) return fail("dilation composition factor");
        if (!(std::get<Translation>(cd).offset == expect_offset))
            return fail("dilation composition offset");
    }
    return SampleResult::pass();
}

std::vector<IdentityId> resolve_identities(const SuiteConfig& cfg) {
    return cfg.identities.empty() ? claimed_identities(cfg.field) : cfg.identities;
}

std::vector<std::string> resolve_kinds(const SuiteConfig& cfg, const std::vector<std::string>& all) {
    if (cfg.transform_kinds.empty()) return all;
    for (const auto& k : cfg.transform_kinds) {
        bool known = false;
        for (const auto& a : all) known = known || a == k;
        if (!known) throw UnknownSuiteError("transform kind " + k);
    }
    return cfg.transform_kinds;
}

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    if (cfg.samples <= 0) throw Error("sample count must be positive");
    switch (cfg.suite) {
        case SuiteId::FieldAxioms:
            return run_engine(cfg, cfg.samples,
                              [&cfg](long i) { return field_axioms_sample(cfg, i); });
        case SuiteId::PlaneAxioms:
            return run_engine(cfg, cfg.samples,
                              [&cfg](long i) { return plane_axioms_sample(cfg, i); });
        case SuiteId::Desargues:
            return run_engine(cfg, cfg.samples, [&cfg](long i) { return desargues_sample(cfg, i); });
        case SuiteId::LineArithAgreement:
            return run_engine(cfg, cfg.samples, [&cfg](long i) { return line_arith_sample(cfg, i); });
        case SuiteId::AuxIndependence:
            return run_engine(cfg, cfg.samples,
                              [&cfg](long i) { return aux_independence_sample(cfg, i); });
        case SuiteId::IdentityCatalog: {
            auto ids = resolve_identities(cfg);
            long total = static_cast<long>(ids.size()) * cfg.samples;
            return run_engine(cfg, total,
                              [&cfg, ids](long i) { return identity_sample(cfg, ids, i); });
        }
        case SuiteId::Invariance: {
            auto kinds = resolve_kinds(cfg, invariance_kinds());
            long total = static_cast<long>(kinds.size()) * cfg.samples;
            return run_engine(cfg, total,
                              [&cfg, kinds](long i) { return invariance_sample(cfg, kinds, i); });
        }
        case SuiteId::Preservation: {
            auto kinds = resolve_kinds(cfg, preservation_kinds());
            long total = static_cast<long>(kinds.size()) * cfg.samples;
            return run_engine(cfg, total, [&cfg, kinds](long i) {
                return preservation_sample(cfg, kinds, i);
            });
        }
        case SuiteId::MobiusNormalization:
            return run_engine(cfg, cfg.samples,
                              [&cfg](long i) { return mobius_normalization_sample(cfg, i); });
        case SuiteId::Composition:
            return run_engine(cfg, cfg.samples,
                              [&cfg](long i) { return composition_sample(cfg, i); });
    }
    throw UnknownSuiteError("bad suite id");
}

std::string report_to_json(const SuiteReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["samples"] = r.run;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["skipped"] = r.skipped;
    j["counterexample"] = r.counterexample;
    j["ms"] = 0; // deterministic serialization; wall time lives in the text form
    return j.dump();
}

std::string report_to_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << " over " << r.field << " (seed " << r.seed << ")\n";
    out << "  samples " << r.run << ": " << r.passed << " passed, " << r.failed << " failed, "
        << r.skipped << " skipped  [" << r.ms << " ms]\n";
    if (r.inconclusive()) out << "  INCONCLUSIVE: no non-skipped samples\n";
    if (!r.counterexample.is_null())
        out << "  counterexample: " << r.counterexample.dump() << "\n";
    out << "  result: " << (r.failed == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

// ------------------------------------------------------------ conformance

ConformanceReport conformance_report(std::uint64_t seed, long samples) {
    if (samples <= 0) throw Error("sample count must be positive");
    ConformanceReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.mul_order = kGeometricMulOrder;
    rep.c0_resolution = kNegatedCrossRatioRhs;

    const FieldTag fields[] = {FieldTag::Rational, FieldTag::Gaussian, FieldTag::Quaternion};
    for (std::size_t fi = 0; fi < 3; ++fi) {
        const FieldTag tag = fields[fi];
        for (IdentityId id : all_identities()) {
            ConformanceRow row;
            row.identity = identity_name(id);
            row.field = field_name(tag);
            row.counterexample = nullptr;
            long fails = 0;
            std::uint64_t row_seed =
                substream_seed(seed, (fi << 8) | static_cast<std::uint64_t>(id));
            for (long k = 0; k < samples; ++k) {
                SplitMix64 g{substream_seed(row_seed, static_cast<std::uint64_t>(k))};
                try {
                    auto sample = gen_identity_sample(id, g, tag, 10, k);
                    IdentityOutcome o = check_identity(id, sample);
                    if (!o.checked()) {
                        ++row.skipped;
                        continue;
                    }
                    ++row.checked;
                    if (!o.result.holds) {
                        ++fails;
                        if (row.counterexample.is_null())
                            row.counterexample = {{"inputs", scalar_list(sample)},
                                                  {"lhs", format_extended(o.result.lhs)},
                                                  {"rhs", format_extended(o.result.rhs)}};
                    }
                } catch (const GenerationError&) {
                    ++row.skipped;
                }
            }
            if (fails > 0) row.status = "fails";
            else if (row.checked == 0) row.status = "inconclusive";
            else if (identity_conditional(id)) row.status = "conditional";
            else row.status = "holds";

            if (!is_commutative(tag) && identity_commutative_only(id))
                row.note = "claimed for commutative fields only";
            else if (id == IdentityId::R5)
                row.note = "equivalence restricted to the domain A != -B";
            else if (id == IdentityId::C7)
                row.note = "hypothesis: A central";
            else if (id == IdentityId::C8)
                row.note = "under sufficient conditions (a)-(d)";
            else if (id == IdentityId::C0)
                row.note = "right-hand side fixed by the resolution check";
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

std::string conformance_to_json(const ConformanceReport& r) {
    ordered_json j;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["mul_order"] = r.mul_order;
    j["c0_resolution"] = r.c0_resolution;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"identity", row.identity},
                        {"field", row.field},
                        {"status", row.status},
                        {"checked", row.checked},
                        {"skipped", row.skipped},
                        {"note", row.note},
                        {"counterexample", row.counterexample}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2);
}

std::string conformance_to_text(const ConformanceReport& r) {
    std::ostringstream out;
    out << "conformance report (seed " << r.seed << ", " << r.samples << " samples per row)\n";
    out << "resolved multiplication order: " << r.mul_order << "\n";
    out << "resolved negated-tuple identity C0: c_r(-A,-B;-C,-D) = " << r.c0_resolution << "\n\n";
    out << "identity  field       status        checked  skipped  note\n";
    for (const auto& row : r.rows) {
        char line[256];
        std::snprintf(line, sizeof line, "%-9s %-11s %-13s %7ld  %7ld  %s\n",
                      row.identity.c_str(), row.field.c_str(), row.status.c_str(), row.checked,
                      row.skipped, row.note.c_str());
        out << line;
        if (!row.counterexample.is_null())
            out << "          counterexample: " << row.counterexample.dump() << "\n";
    }
    return out.str();
}

} // namespace crossline
