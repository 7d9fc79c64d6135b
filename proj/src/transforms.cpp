#include "crossline/transforms.hpp"

#include "json.hpp"

namespace crossline {

LineTransform make_inversion(Scalar p) {
    if (p.is_zero()) throw AdmissibilityError("inversion point P != O violated");
    return Inversion{std::move(p)};
}

LineTransform make_natural_dilation(long long n) {
    if (n == 0) throw AdmissibilityError("natural dilation requires n != 0");
    return NaturalDilation{n};
}

LineTransform make_mobius(Scalar b, Scalar c, Scalar d) {
    if (b == c || b == d || c == d)
        throw AdmissibilityError("Moebius parameters must be pairwise distinct");
    return Mobius{std::move(b), std::move(c), std::move(d)};
}

const char* transform_kind_name(const LineTransform& t) {
    switch (t.index()) {
        case 0: return "inversion";
        case 1: return "reflection";
        case 2: return "natural-translation";
        case 3: return "natural-dilation";
        default: return "mobius";
    }
}

namespace {

const Scalar& finite_arg(const ExtendedScalar& x, const char* kind) {
    if (x.is_infinity()) throw UndefinedFormError(std::string(kind) + " of inf");
    return x.finite();
}

ExtendedScalar apply_mobius(const Mobius& m, const ExtendedScalar& x) {
    if (x.is_infinity()) return (m.b - m.d) * inv(m.b - m.c);
    const Scalar& xs = x.finite();
    // First bracket through the extension: (X-D)^-1 (B-D) is inf exactly at
    // X = D; the second bracket is then (B-C)^-1 (D-C) != 0, so the
    // absorbing product is defined.
    ExtendedScalar bracket1 = absorb_mul(ext_inv(ExtendedScalar(xs - m.d)), m.b - m.d);
    Scalar bracket2 = inv(m.b - m.c) * (xs - m.c);
    if (bracket1.is_finite()) return bracket1.finite() * bracket2;
    return absorb_mul(bracket1, bracket2);
}

} // namespace

ExtendedScalar apply_line_transform(const LineTransform& t, const ExtendedScalar& x) {
    return std::visit(
        [&](const auto& k) -> ExtendedScalar {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Inversion>) {
                return k.factor * finite_arg(x, "inversion");
            } else if constexpr (std::is_same_v<T, Reflection>) {
                return -finite_arg(x, "reflection");
            } else if constexpr (std::is_same_v<T, NaturalTranslation>) {
                return k.offset + finite_arg(x, "natural translation");
            } else if constexpr (std::is_same_v<T, NaturalDilation>) {
                return int_mul(k.n, finite_arg(x, "natural dilation"));
            } else {
                return apply_mobius(k, x);
            }
        },
        t);
}

ExtendedScalar cr_after(const LineTransform& t, const CrossRatioInput& tuple) {
    return cross_ratio(CrossRatioInput::make(
        apply_line_transform(t, tuple.a), apply_line_transform(t, tuple.b),
        apply_line_transform(t, tuple.c), apply_line_transform(t, tuple.d)));
}

// ---------------------------------------------------- plane collineations

PlaneCollineation make_dilation(Scalar factor, PlanePoint offset) {
    if (factor.is_zero()) throw AdmissibilityError("dilation factor must be nonzero");
    if (factor.is_one()) return Translation{std::move(offset)};
    return Dilation{std::move(factor), std::move(offset)};
}

PlanePoint apply_collineation(const PlaneCollineation& phi, const PlanePoint& p) {
    if (const auto* t = std::get_if<Translation>(&phi)) return p + t->offset;
    const auto& d = std::get<Dilation>(phi);
    return d.factor * p + d.offset;
}

PlaneLine image_line(const PlaneCollineation& phi, const PlaneLine& l) {
    PlanePoint p = apply_collineation(phi, l.base);
    PlanePoint q = apply_collineation(phi, l.base + PlanePoint{l.dir.dx, l.dir.dy});
    PlaneLine img = line_through(p, q);
    if (!(img.dir == l.dir)) throw Error("collineation failed to preserve direction");
    return img;
}

PlaneCollineation compose(const PlaneCollineation& outer, const PlaneCollineation& inner) {
    const auto* t2 = std::get_if<Translation>(&outer);
    const auto* t1 = std::get_if<Translation>(&inner);
    if (t2 && t1) return Translation{t1->offset + t2->offset};
    if (t2) {
        const auto& d1 = std::get<Dilation>(inner);
        return make_dilation(d1.factor, d1.offset + t2->offset);
    }
    const auto& d2 = std::get<Dilation>(outer);
    if (t1) return make_dilation(d2.factor, d2.factor * t1->offset + d2.offset);
    const auto& d1 = std::get<Dilation>(inner);
    return make_dilation(d2.factor * d1.factor, d2.factor * d1.offset + d2.offset);
}

// ------------------------------------------------------ parallel projection

ParallelProjection make_parallel_projection(PlaneLine source, PlaneLine target, Direction dir) {
    if (dir == source.dir || dir == target.dir)
        throw AdmissibilityError("projection direction must differ from both line directions");
    return {std::move(source), std::move(target), std::move(dir)};
}

PlanePoint project(const ParallelProjection& p, const PlanePoint& A) {
    if (!on_line(A, p.source)) throw IncidenceError("projected point off the source line");
    PlaneLine ray{A, p.dir};
    return meet(ray, p.target, "projection");
}

// ---------------------------------------------------------- frame transport

Scalar TransportedFrame::kappa(const Scalar& x) const {
    return label(image, map(point_of(source, x)));
}

TransportedFrame transport_frame_fn(PointMapFn map, const LineFrame& f) {
    PlanePoint o1 = map(f.zero);
    PlanePoint i1 = map(f.unit);
    if (o1 == i1) throw Error("frame transport collapsed O and I");
    return {f, LineFrame::make(o1, i1), std::move(map)};
}

TransportedFrame transport_frame(const PlaneCollineation& phi, const LineFrame& f) {
    return transport_frame_fn([phi](const PlanePoint& p) { return apply_collineation(phi, p); },
                              f);
}

TransportedFrame transport_frame(const ParallelProjection& p, const LineFrame& f) {
    if (!(f.line == p.source)) throw IncidenceError("frame line is not the projection source");
    return transport_frame_fn([p](const PlanePoint& q) { return project(p, q); }, f);
}

bool cr_preserved(const TransportedFrame& tf, const std::array<PlanePoint, 4>& points) {
    std::array<Scalar, 4> src;
    std::array<Scalar, 4> img;
    for (std::size_t i = 0; i < 4; ++i) {
        src[i] = label(tf.source, points[i]);
        img[i] = label(tf.image, tf.apply(points[i]));
    }
    ExtendedScalar value = cross_ratio(CrossRatioInput::of_scalars(src[0], src[1], src[2], src[3]));
    ExtendedScalar moved = cross_ratio(CrossRatioInput::of_scalars(img[0], img[1], img[2], img[3]));
    return ExtendedScalar(tf.kappa(value.finite())) == moved;
}

bool cr_preserved(const PlaneCollineation& phi, const LineFrame& f,
                  const std::array<PlanePoint, 4>& points) {
    return cr_preserved(transport_frame(phi, f), points);
}

bool cr_preserved(const ParallelProjection& p, const LineFrame& f,
                  const std::array<PlanePoint, 4>& points) {
    return cr_preserved(transport_frame(p, f), points);
}

// -------------------------------------------------------------- descriptors

namespace {

using djson = nlohmann::ordered_json;

djson parse_descriptor(std::string_view text) {
    djson doc = djson::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("kind"))
        throw ParseError("expected a transform descriptor object with a kind", 0);
    return doc;
}

Scalar scalar_field(const djson& doc, const char* key, FieldTag tag) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field ") + key, 0);
    return parse_scalar(doc.at(key).get<std::string>(), tag);
}

PlanePoint point_field(const djson& doc, const char* key, FieldTag tag) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field ") + key, 0);
    return parse_point(doc.at(key).get<std::string>(), tag);
}

PlaneLine line_field(const djson& doc, const char* key, FieldTag tag) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field ") + key, 0);
    const djson& sub = doc.at(key);
    PlanePoint base = point_field(sub, "base", tag);
    PlanePoint dirv = point_field(sub, "dir", tag);
    return PlaneLine{base, Direction::of_vector(dirv)};
}

std::string dir_literal(const Direction& d) {
    return "[" + format_scalar(d.dx) + " ; " + format_scalar(d.dy) + "]";
}

djson line_descriptor(const PlaneLine& l) {
    return djson{{"base", format_point(l.base)}, {"dir", dir_literal(l.dir)}};
}

} // namespace

LineTransform line_transform_from_json(std::string_view text, FieldTag tag) {
    djson doc = parse_descriptor(text);
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "inversion") return make_inversion(scalar_field(doc, "P", tag));
    if (kind == "reflection") return Reflection{};
    if (kind == "natural_translation") return NaturalTranslation{scalar_field(doc, "P", tag)};
    if (kind == "natural_dilation") {
        if (!doc.contains("n") || !doc.at("n").is_number_integer())
            throw ParseError("natural_dilation needs an integer n", 0);
        return make_natural_dilation(doc.at("n").get<long long>());
    }
    if (kind == "mobius")
        return make_mobius(scalar_field(doc, "B", tag), scalar_field(doc, "C", tag),
                           scalar_field(doc, "D", tag));
    throw ParseError("unknown line transform kind: " + kind, 0);
}

std::string line_transform_to_json(const LineTransform& t) {
    djson doc;
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Inversion>) {
                doc = {{"kind", "inversion"}, {"P", format_scalar(k.factor)}};
            } else if constexpr (std::is_same_v<T, Reflection>) {
                doc = {{"kind", "reflection"}};
            } else if constexpr (std::is_same_v<T, NaturalTranslation>) {
                doc = {{"kind", "natural_translation"}, {"P", format_scalar(k.offset)}};
            } else if constexpr (std::is_same_v<T, NaturalDilation>) {
                doc = {{"kind", "natural_dilation"}, {"n", k.n}};
            } else {
                doc = {{"kind", "mobius"},
                       {"B", format_scalar(k.b)},
                       {"C", format_scalar(k.c)},
                       {"D", format_scalar(k.d)}};
            }
        },
        t);
    return doc.dump();
}

PlaneCollineation collineation_from_json(std::string_view text, FieldTag tag) {
    djson doc = parse_descriptor(text);
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "translation") return Translation{point_field(doc, "t", tag)};
    if (kind == "dilation")
        return make_dilation(scalar_field(doc, "lambda", tag), point_field(doc, "c", tag));
    throw ParseError("unknown collineation kind: " + kind, 0);
}

std::string collineation_to_json(const PlaneCollineation& phi) {
    if (const auto* t = std::get_if<Translation>(&phi))
        return djson{{"kind", "translation"}, {"t", format_point(t->offset)}}.dump();
    const auto& d = std::get<Dilation>(phi);
    return djson{{"kind", "dilation"},
                 {"lambda", format_scalar(d.factor)},
                 {"c", format_point(d.offset)}}
        .dump();
}

ParallelProjection projection_from_json(std::string_view text, FieldTag tag) {
    djson doc = parse_descriptor(text);
    if (doc.at("kind").get<std::string>() != "parallel_projection")
        throw ParseError("expected kind parallel_projection", 0);
    PlanePoint dirv = point_field(doc, "dir", tag);
    return make_parallel_projection(line_field(doc, "source", tag), line_field(doc, "target", tag),
                                    Direction::of_vector(dirv));
}

std::string projection_to_json(const ParallelProjection& p) {
    return djson{{"kind", "parallel_projection"},
                 {"dir", dir_literal(p.dir)},
                 {"source", line_descriptor(p.source)},
                 {"target", line_descriptor(p.target)}}
        .dump();
}

} // namespace crossline
