#include "crossline/plane.hpp"

#include <array>

#include "crossline/rng.hpp"

namespace crossline {

PlanePoint::PlanePoint(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {
    detail::require_same_field(x, y, "plane point");
}

PlanePoint operator+(const PlanePoint& p, const PlanePoint& q) {
    return {p.x + q.x, p.y + q.y};
}
PlanePoint operator-(const PlanePoint& p, const PlanePoint& q) {
    return {p.x - q.x, p.y - q.y};
}
PlanePoint operator*(const Scalar& t, const PlanePoint& v) {
    return {t * v.x, t * v.y};
}

std::string format_point(const PlanePoint& p) {
    return "[" + format_scalar(p.x) + " ; " + format_scalar(p.y) + "]";
}

PlanePoint parse_point(std::string_view text, FieldTag tag) {
    std::size_t open = text.find('[');
    std::size_t sep = text.find(';');
    std::size_t close = text.rfind(']');
    if (open == std::string_view::npos || sep == std::string_view::npos ||
        close == std::string_view::npos || !(open < sep && sep < close))
        throw ParseError("expected point literal [x ; y]", 0);
    Scalar x = parse_scalar(text.substr(open + 1, sep - open - 1), tag);
    Scalar y = parse_scalar(text.substr(sep + 1, close - sep - 1), tag);
    return {std::move(x), std::move(y)};
}

Direction Direction::of_vector(const PlanePoint& v) {
    if (!v.x.is_zero()) {
        // Left-normalize: premultiply by dx^-1 so the first coordinate is 1.
        return {Scalar::one(v.field()), inv(v.x) * v.y};
    }
    if (!v.y.is_zero()) {
        return {Scalar::zero(v.field()), Scalar::one(v.field())};
    }
    throw DegeneratePairError();
}

bool PlaneLine::contains(const PlanePoint& p) const { return on_line(p, *this); }

bool PlaneLine::operator==(const PlaneLine& other) const {
    return dir == other.dir && contains(other.base);
}

bool on_line(const PlanePoint& p, const PlaneLine& l) {
    PlanePoint v = p - l.base;
    if (l.dir.is_vertical()) return v.x.is_zero();
    // dir = (1, m): the parameter is forced to t = v.x.
    return v.y == v.x * l.dir.dy;
}

PlaneLine line_through(const PlanePoint& p, const PlanePoint& q) {
    if (p == q) throw DegeneratePairError();
    return {p, Direction::of_vector(q - p)};
}

PlaneLine parallel_through(const PlaneLine& l, const PlanePoint& p) {
    if (on_line(p, l)) return l;
    return {p, l.dir};
}

std::variant<PlanePoint, ParallelOutcome> intersect(const PlaneLine& l1, const PlaneLine& l2) {
    if (l1.dir == l2.dir) {
        if (on_line(l2.base, l1)) throw CoincidentLinesError();
        return ParallelOutcome{};
    }
    const FieldTag tag = l1.base.field();
    PlanePoint result{Scalar::zero(tag), Scalar::zero(tag)};
    if (l1.dir.is_vertical()) {
        // l1: x = b1x; l2 has dir (1, m2).
        Scalar t = l1.base.x - l2.base.x;
        result = {l1.base.x, l2.base.y + t * l2.dir.dy};
    } else if (l2.dir.is_vertical()) {
        Scalar t = l2.base.x - l1.base.x;
        result = {l2.base.x, l1.base.y + t * l1.dir.dy};
    } else {
        // Both (1, m): t*(m1 - m2) = (b2y - b1y) + (b1x - b2x)*m2.
        Scalar rhs = (l2.base.y - l1.base.y) + (l1.base.x - l2.base.x) * l2.dir.dy;
        Scalar t = rhs * inv(l1.dir.dy - l2.dir.dy);
        result = {l1.base.x + t, l1.base.y + t * l1.dir.dy};
    }
    if (!on_line(result, l1) || !on_line(result, l2))
        throw Error("intersection postcondition violated");
    return result;
}

PlanePoint meet(const PlaneLine& l1, const PlaneLine& l2, const std::string& step) {
    auto r = intersect(l1, l2);
    if (std::holds_alternative<ParallelOutcome>(r))
        throw ConstructionDegeneracyError(step);
    return std::get<PlanePoint>(r);
}

bool collinear(std::span<const PlanePoint> points) {
    if (points.size() < 3) return true;
    // Find two distinct points to span a line; all-coincident is trivially
    // collinear.
    std::size_t j = 1;
    while (j < points.size() && points[j] == points[0]) ++j;
    if (j == points.size()) return true;
    PlaneLine l = line_through(points[0], points[j]);
    for (const auto& p : points)
        if (!on_line(p, l)) return false;
    return true;
}

// ----------------------------------------------------------- Desargues

namespace {

struct ConfigLines {
    PlaneLine aa1, bb1, cc1, ab, a1b1, bc, b1c1, ac, a1c1;
};

ConfigLines validate(const DesarguesConfig& g) {
    auto need = [](bool ok, const char* clause) {
        if (!ok) throw InvalidConfigurationError(clause);
    };
    need(g.A != g.A1 && g.B != g.B1 && g.C != g.C1, "vertex pairs A/A1, B/B1, C/C1 distinct");
    need(g.A != g.B && g.B != g.C && g.A != g.C, "triangle ABC nondegenerate");
    need(g.A1 != g.B1 && g.B1 != g.C1 && g.A1 != g.C1, "triangle A1B1C1 nondegenerate");

    ConfigLines L{line_through(g.A, g.A1), line_through(g.B, g.B1), line_through(g.C, g.C1),
                  line_through(g.A, g.B),  line_through(g.A1, g.B1),
                  line_through(g.B, g.C),  line_through(g.B1, g.C1),
                  line_through(g.A, g.C),  line_through(g.A1, g.C1)};

    need(L.ab.dir == L.a1b1.dir, "l(A,B) parallel to l(A1,B1)");
    need(!(L.ab == L.a1b1), "l(A,B) distinct from l(A1,B1)");
    need(L.bc.dir == L.b1c1.dir, "l(B,C) parallel to l(B1,C1)");
    need(!(L.bc == L.b1c1), "l(B,C) distinct from l(B1,C1)");

    const std::array<const PlaneLine*, 5> five{&L.aa1, &L.bb1, &L.cc1, &L.ac, &L.a1c1};
    for (std::size_t i = 0; i < five.size(); ++i)
        for (std::size_t j = i + 1; j < five.size(); ++j)
            need(!(*five[i] == *five[j]), "five configuration lines pairwise distinct");

    bool parallel = L.aa1.dir == L.bb1.dir && L.bb1.dir == L.cc1.dir;
    if (!parallel) {
        need(L.aa1.dir != L.bb1.dir, "perspectivity: vertex lines parallel or concurrent");
        auto p = intersect(L.aa1, L.bb1);
        need(std::holds_alternative<PlanePoint>(p) && on_line(std::get<PlanePoint>(p), L.cc1),
             "perspectivity: vertex lines concurrent in one point");
    }
    return L;
}

PlanePoint gen_point(SplitMix64& g, FieldTag field, std::int64_t bound) {
    Scalar x = gen_scalar(g, field, bound);
    Scalar y = gen_scalar(g, field, bound);
    return {std::move(x), std::move(y)};
}

} // namespace

bool desargues_check(const DesarguesConfig& cfg) {
    ConfigLines L = validate(cfg);
    return L.ac.dir == L.a1c1.dir;
}

DesarguesConfig random_desargues_config(std::uint64_t seed, FieldTag field, DesarguesCase shape) {
    constexpr std::int64_t bound = 5;
    for (int attempt = 0; attempt < kMaxRejects; ++attempt) {
        SplitMix64 g{substream_seed(seed, static_cast<std::uint64_t>(attempt))};
        DesarguesConfig cfg;
        cfg.A = gen_point(g, field, bound);
        cfg.B = gen_point(g, field, bound);
        cfg.C = gen_point(g, field, bound);
        if (shape == DesarguesCase::Parallel) {
            PlanePoint v = gen_point(g, field, bound);
            if (v.x.is_zero() && v.y.is_zero()) continue;
            cfg.A1 = cfg.A + v;
            cfg.B1 = cfg.B + v;
            cfg.C1 = cfg.C + v;
        } else {
            PlanePoint center = gen_point(g, field, bound);
            Scalar lam = gen_scalar(g, field, bound);
            if (lam.is_zero() || lam.is_one()) continue;
            auto scale = [&](const PlanePoint& p) { return center + lam * (p - center); };
            cfg.A1 = scale(cfg.A);
            cfg.B1 = scale(cfg.B);
            cfg.C1 = scale(cfg.C);
        }
        try {
            validate(cfg);
        } catch (const InvalidConfigurationError&) {
            continue;
        }
        return cfg;
    }
    throw GenerationError("Desargues configuration");
}

} // namespace crossline
