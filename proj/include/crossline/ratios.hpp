#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossline/extended.hpp"
#include "crossline/rng.hpp"

namespace crossline {

/// Ratio of two points: r(A:B) = B^-1 * A. Requires B != 0.
Scalar ratio2(const Scalar& a, const Scalar& b);

/// Ratio of three points: r(A,B;C) = (B-C)^-1 * (A-C). Requires B != C.
Scalar ratio3(const Scalar& a, const Scalar& b, const Scalar& c);

/**
 * Arguments of a cross-ratio, at most one of them infinite.
 * Admissibility (checked by cross_ratio): finite case a != d and b != c;
 * with an infinite slot, the one distinctness constraint the slot formula
 * inverts (a-slot/d-slot: b != c; b-slot/c-slot: a != d).
 */
struct CrossRatioInput {
    ExtendedScalar a, b, c, d;

    static CrossRatioInput make(ExtendedScalar a, ExtendedScalar b,
                                ExtendedScalar c, ExtendedScalar d);
    static CrossRatioInput of_scalars(const Scalar& a, const Scalar& b,
                                      const Scalar& c, const Scalar& d);
    FieldTag field() const { return a.field(); }
};

/**
 * Cross-ratio of four collinear labels:
 *   c_r(A,B;C,D) = [(A-D)^-1 (B-D)] [(B-C)^-1 (A-C)]
 * in exactly this factor order. One infinite argument dispatches to its
 * dedicated closed formula:
 *   c_r(inf,B;C,D) = (B-D)(B-C)^-1        c_r(A,inf;C,D) = (A-D)^-1 (A-C)
 *   c_r(A,B;inf,D) = (A-D)^-1 (B-D)       c_r(A,B;C,inf) = (B-C)^-1 (A-C)
 * Finite admissible input always yields a finite value. Throws
 * AdmissibilityError naming the violated distinctness constraint.
 */
ExtendedScalar cross_ratio(const CrossRatioInput& in);

using CrossRatioFn = ExtendedScalar (*)(const CrossRatioInput&);

// ---------------------------------------------------------------- catalog

/// Machine-checkable identities of the ratio and cross-ratio maps.
enum class IdentityId {
    R1, R2, R3, R4, R5, R6, R7, R8, R9,
    C0, C1, C2, C3, C4, C5, C6, C7, C8, C9, C10,
};

inline constexpr int kIdentityCount = 20;
std::vector<IdentityId> all_identities();
const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
/// Human-readable statement of the formula the check evaluates.
const char* identity_formula(IdentityId id);
int identity_arity(IdentityId id);
/// True for identities claimed over commutative fields only (R9, C10).
bool identity_commutative_only(IdentityId id);
/// True for identities that carry hypotheses beyond distinctness
/// (R5 domain restriction, C7 centrality, C8 sufficient conditions).
bool identity_conditional(IdentityId id);
/// The set the verification suites assert per field: everything over the
/// commutative fields; over quaternions the subset R1-R8, C0, C1, C6-C8.
/// The remaining quaternion rows are evaluated by the conformance report.
std::vector<IdentityId> claimed_identities(FieldTag field);

/// geometric_mul factor order and the negated-cross-ratio right-hand side,
/// both fixed by resolution checks in the test suite and reported by the
/// conformance document.
inline constexpr const char* kNegatedCrossRatioRhs = "c_r(A,B;C,D)";

struct IdentityCheckResult {
    IdentityId id;
    std::vector<Scalar> inputs;
    ExtendedScalar lhs;
    ExtendedScalar rhs;
    bool holds; // lhs == rhs exactly
};

struct IdentityOutcome {
    enum class Status { Checked, Skipped };
    Status status = Status::Skipped;
    IdentityCheckResult result;
    std::string skip_reason;

    bool checked() const { return status == Status::Checked; }
};

/**
 * Evaluates both sides of the identity on the sample, independently and
 * without algebraic simplification. A sample violating the identity's own
 * hypotheses is Skipped with a reason, never counted as a pass. The
 * cross-ratio evaluations go through `cr` so mutation fixtures can swap in
 * a corrupted implementation.
 */
IdentityOutcome check_identity(IdentityId id, std::span<const Scalar> sample,
                               CrossRatioFn cr = cross_ratio);

/// Draws a sample satisfying the identity's hypotheses (constructively
/// where rejection would be hopeless, e.g. centrality over quaternions).
/// `index` cycles structured cases, e.g. the four C8 conditions.
std::vector<Scalar> gen_identity_sample(IdentityId id, SplitMix64& g, FieldTag field,
                                        std::int64_t bound, long index);

} // namespace crossline
