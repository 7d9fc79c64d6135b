#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "crossline/scalar.hpp"

namespace crossline {

/// Coordinate point of AG(2, K). Both coordinates carry the same field tag.
struct PlanePoint {
    Scalar x;
    Scalar y;

    PlanePoint() = default;
    PlanePoint(Scalar px, Scalar py);

    FieldTag field() const { return x.field(); }
    bool operator==(const PlanePoint&) const = default;
};

PlanePoint operator+(const PlanePoint&, const PlanePoint&);
PlanePoint operator-(const PlanePoint&, const PlanePoint&);
/// Left scalar action t * (dx, dy) = (t*dx, t*dy).
PlanePoint operator*(const Scalar& t, const PlanePoint&);

/// Text form `[x ; y]` with scalar literals.
std::string format_point(const PlanePoint&);
PlanePoint parse_point(std::string_view text, FieldTag tag);

/**
 * Canonical direction of a line: the left class K*(dx,dy) is represented
 * by either (1, m) or (0, 1). Left normalization keeps {t*d} a left
 * submodule, so parallelism is a syntactic equality check.
 */
struct Direction {
    Scalar dx;
    Scalar dy;

    /// Left-normalizes a nonzero vector; throws DegeneratePairError on zero.
    static Direction of_vector(const PlanePoint& v);
    bool is_vertical() const { return dx.is_zero(); }
    bool operator==(const Direction&) const = default;
};

/// Line as base point plus canonical direction; the point set is
/// {base + t*dir : t in K}. Equality ignores the choice of base inside
/// the same point set.
struct PlaneLine {
    PlanePoint base;
    Direction dir;

    bool contains(const PlanePoint& p) const;
    bool operator==(const PlaneLine& other) const;
};

/// The unique line through two distinct points. Throws DegeneratePairError.
PlaneLine line_through(const PlanePoint& p, const PlanePoint& q);

/// The unique line through p with the direction of l (Playfair); returns a
/// line equal to l itself when p lies on l.
PlaneLine parallel_through(const PlaneLine& l, const PlanePoint& p);

struct ParallelOutcome {
    bool operator==(const ParallelOutcome&) const = default;
};

/// Unique intersection point, or ParallelOutcome for strictly parallel
/// lines. Throws CoincidentLinesError when both arguments denote the same
/// point set.
std::variant<PlanePoint, ParallelOutcome> intersect(const PlaneLine& l1, const PlaneLine& l2);

/// Intersection that must exist; throws ConstructionDegeneracyError(step)
/// when the lines are parallel.
PlanePoint meet(const PlaneLine& l1, const PlaneLine& l2, const std::string& step);

bool on_line(const PlanePoint& p, const PlaneLine& l);
bool collinear(std::span<const PlanePoint> points);

/// Two perspective triangles satisfying the hypothesis side of Desargues'
/// axiom (validated, not assumed).
struct DesarguesConfig {
    PlanePoint A, B, C;
    PlanePoint A1, B1, C1;
};

enum class DesarguesCase : std::uint8_t { Parallel, Pencil };

/// Validates every hypothesis clause (perspectivity, the two parallel
/// pairs, distinctness side conditions); throws InvalidConfigurationError
/// naming the first failed clause. Returns whether the conclusion
/// l(A,C) || l(A1,C1) holds -- always true in AG(2, K).
bool desargues_check(const DesarguesConfig& cfg);

/// Deterministic generator of valid configurations of the requested case;
/// degenerate draws are rejection-sampled (at most 1000 retries, then
/// GenerationError).
DesarguesConfig random_desargues_config(std::uint64_t seed, FieldTag field, DesarguesCase shape);

} // namespace crossline
