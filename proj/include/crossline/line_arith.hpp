#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crossline/plane.hpp"

namespace crossline {

/**
 * A line with chosen zero point O and unit point I. Labels are the left
 * coordinates along d = I - O: the label of X is the unique x with
 * X = O + x*d, so label(O) = 0 and label(I) = 1.
 */
struct LineFrame {
    PlaneLine line;
    PlanePoint zero;
    PlanePoint unit;
    PlanePoint diff; // cached I - O, as a vector

    static LineFrame make(const PlanePoint& o, const PlanePoint& i);
    FieldTag field() const { return zero.field(); }
};

/// The unique x with X = zero + x*diff; throws IncidenceError off the line.
Scalar label(const LineFrame& frame, const PlanePoint& X);
/// Inverse of label.
PlanePoint point_of(const LineFrame& frame, const Scalar& x);

/**
 * Ordered record of the auxiliary points and lines a geometric algorithm
 * produced. Every referenced object appears earlier in the trace, and
 * replaying the rules reproduces every recorded object. Rules:
 *   "frame"            -- given frame point (O, I)
 *   "input"            -- given operand point (A, B)
 *   "aux"              -- chosen auxiliary point (B1)
 *   "join P Q"         -- line through two recorded points
 *   "parallel L P"     -- parallel to recorded line L through P
 *   "parjoin P Q R"    -- parallel to join(P, Q) through R
 *   "meet L1 L2"       -- intersection point of two recorded lines
 */
struct TraceStep {
    std::string id;
    std::variant<PlanePoint, PlaneLine> object;
    std::string rule;

    bool is_point() const { return object.index() == 0; }
    const PlanePoint& point() const { return std::get<PlanePoint>(object); }
    const PlaneLine& line() const { return std::get<PlaneLine>(object); }
};

struct ConstructionTrace {
    std::vector<TraceStep> steps;
    PlanePoint result;

    FieldTag field() const { return result.field(); }
    const TraceStep* find(const std::string& id) const;
};

/// JSON document `{field, steps: [{id, kind, data, rule}], result}`.
std::string trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(std::string_view text);

/// Re-executes every rule against the plane module and checks each
/// recorded object; returns the reconstructed result point. Throws on any
/// mismatch.
PlanePoint replay_trace(const ConstructionTrace& trace);

struct ConstructionResult {
    PlanePoint point;
    ConstructionTrace trace;
};

/// Factor order the multiplication construction realizes, fixed once by
/// the order-resolution check and reported by the conformance document.
inline constexpr const char* kGeometricMulOrder = "label(A) * label(B)";

/// Deterministic default auxiliary point: zero + (0,1) when that is off
/// the line, else zero + (1,1).
PlanePoint default_aux_point(const LineFrame& frame);

/**
 * Geometric addition of two points of the frame line: P1 is the meet of
 * the parallel to the base line through B1 with the parallel to join(O,B1)
 * through A, and the result is the meet of the parallel to join(B,B1)
 * through P1 with the base line. Contract: label(result) =
 * label(A) + label(B) for every admissible B1.
 */
ConstructionResult geometric_add(const LineFrame& frame, const PlanePoint& A,
                                 const PlanePoint& B,
                                 const std::optional<PlanePoint>& aux = std::nullopt);

/**
 * Geometric multiplication: P1 is the meet of the parallel to join(I,B1)
 * through A with join(O,B1); the result is the meet of the parallel to
 * join(B,B1) through P1 with the base line. The construction realizes the
 * left-to-right product: label(result) = label(A) * label(B), the factor
 * order fixed once by the order-resolution check in the test suite
 * (quaternion labels (i, j) construct i*j = k, not j*i).
 */
ConstructionResult geometric_mul(const LineFrame& frame, const PlanePoint& A,
                                 const PlanePoint& B,
                                 const std::optional<PlanePoint>& aux = std::nullopt);

} // namespace crossline
