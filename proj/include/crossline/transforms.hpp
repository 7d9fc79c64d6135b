#pragma once

#include <array>
#include <functional>
#include <variant>

#include "crossline/line_arith.hpp"
#include "crossline/ratios.hpp"

namespace crossline {

// ------------------------------------------------------- line transforms

/// j_P(A) = P * A for a fixed P != 0.
struct Inversion {
    Scalar factor;
};
/// A -> -A; equal to inversion with P = -I pointwise.
struct Reflection {};
/// phi_P(A) = P + A.
struct NaturalTranslation {
    Scalar offset;
};
/// delta_n(A) = nA, the n-fold sum (n < 0 sums -A); n != 0.
struct NaturalDilation {
    long long n;
};
/// mu(X) = c_r(X,B;C,D) for fixed pairwise distinct B, C, D. Maps the
/// extended line to itself with mu(B) = I, mu(C) = O, mu(D) = inf.
struct Mobius {
    Scalar b, c, d;
};

using LineTransform =
    std::variant<Inversion, Reflection, NaturalTranslation, NaturalDilation, Mobius>;

/// Validating constructors.
LineTransform make_inversion(Scalar p);               // p != 0
LineTransform make_natural_dilation(long long n);     // n != 0
LineTransform make_mobius(Scalar b, Scalar c, Scalar d); // pairwise distinct

const char* transform_kind_name(const LineTransform& t);

/// Applies the transform to a label. The non-Moebius kinds are defined on
/// finite labels only (the extension exposes no inf + finite form) and
/// throw UndefinedFormError on an infinite argument; Moebius is total on
/// K u {inf} via its closed slot formulas.
ExtendedScalar apply_line_transform(const LineTransform& t, const ExtendedScalar& x);

/// Cross-ratio of the componentwise-transformed tuple. The invariance
/// contract is cr_after(t, T) = cross_ratio(T) for every admissible T for
/// the first four kinds; for Moebius it is stated for tuples (A, B, C, D)
/// whose last three entries are the transform parameters (over a
/// commutative field arbitrary tuples work as well, and the suites check
/// that strengthening there).
ExtendedScalar cr_after(const LineTransform& t, const CrossRatioInput& tuple);

// ---------------------------------------------------- plane collineations

/// X -> X + offset.
struct Translation {
    PlanePoint offset;
};
/// X -> factor * X + offset (componentwise left multiplication), factor != 0.
struct Dilation {
    Scalar factor;
    PlanePoint offset;
};

using PlaneCollineation = std::variant<Translation, Dilation>;

/// factor = 1 degenerates to a translation.
PlaneCollineation make_dilation(Scalar factor, PlanePoint offset);

PlanePoint apply_collineation(const PlaneCollineation& phi, const PlanePoint& p);

/// Image of a line; canonical direction is preserved (dilatation
/// property), which the implementation verifies.
PlaneLine image_line(const PlaneCollineation& phi, const PlaneLine& l);

/// Composite outer . inner, normalized to Translation when the combined
/// factor is 1.
PlaneCollineation compose(const PlaneCollineation& outer, const PlaneCollineation& inner);

// ------------------------------------------------------ parallel projection

/// Bijection source -> target sending each point along a fixed direction
/// distinct from both line directions.
struct ParallelProjection {
    PlaneLine source;
    PlaneLine target;
    Direction dir;
};

ParallelProjection make_parallel_projection(PlaneLine source, PlaneLine target, Direction dir);

/// Image of a source point; the join of A and its image has direction dir.
PlanePoint project(const ParallelProjection& p, const PlanePoint& A);

// ---------------------------------------------------------- frame transport

using PointMapFn = std::function<PlanePoint(const PlanePoint&)>;

/**
 * The image frame O' = phi(O), I' = phi(I) of a line frame under a
 * line-to-line bijection, together with the induced label map
 * kappa(x) = label'(phi(point_of(x))). kappa fixes 0 and 1 and is an
 * isomorphism of the two line skew fields; for a left-multiplication
 * dilation it is the inner automorphism x -> factor * x * factor^-1.
 */
struct TransportedFrame {
    LineFrame source;
    LineFrame image;
    PointMapFn map;

    PlanePoint apply(const PlanePoint& p) const { return map(p); }
    Scalar kappa(const Scalar& x) const;
};

TransportedFrame transport_frame(const PlaneCollineation& phi, const LineFrame& f);
/// Requires f.line = p.source.
TransportedFrame transport_frame(const ParallelProjection& p, const LineFrame& f);
/// Type-erased variant used by the mutation fixtures.
TransportedFrame transport_frame_fn(PointMapFn map, const LineFrame& f);

/// Exact check of kappa(c_r(labels)) = c_r(transported labels) for four
/// admissible points of the source line.
bool cr_preserved(const TransportedFrame& tf, const std::array<PlanePoint, 4>& points);
bool cr_preserved(const PlaneCollineation& phi, const LineFrame& f,
                  const std::array<PlanePoint, 4>& points);
bool cr_preserved(const ParallelProjection& p, const LineFrame& f,
                  const std::array<PlanePoint, 4>& points);

// -------------------------------------------------------------- descriptors

/**
 * JSON descriptors for transforms, e.g.
 *   {"kind":"inversion","P":"(0, 1, 0, 0)"}
 *   {"kind":"reflection"}
 *   {"kind":"natural_translation","P":"2"}
 *   {"kind":"natural_dilation","n":-3}
 *   {"kind":"mobius","B":"1","C":"2","D":"3"}
 *   {"kind":"translation","t":"[1 ; 0]"}
 *   {"kind":"dilation","lambda":"2","c":"[0 ; 0]"}
 *   {"kind":"parallel_projection","dir":"[0 ; 1]",
 *    "source":{"base":"[0 ; 0]","dir":"[1 ; 0]"},
 *    "target":{"base":"[0 ; 1]","dir":"[1 ; 0]"}}
 * Scalar and point fields hold canonical literals of the given field.
 */
LineTransform line_transform_from_json(std::string_view text, FieldTag tag);
std::string line_transform_to_json(const LineTransform& t);
PlaneCollineation collineation_from_json(std::string_view text, FieldTag tag);
std::string collineation_to_json(const PlaneCollineation& phi);
ParallelProjection projection_from_json(std::string_view text, FieldTag tag);
std::string projection_to_json(const ParallelProjection& p);

} // namespace crossline
