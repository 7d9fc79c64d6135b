#include "crossline/ratios.hpp"

#include <array>

namespace crossline {

Scalar ratio2(const Scalar& a, const Scalar& b) {
    detail::require_same_field(a, b, "ratio2");
    if (b.is_zero()) throw AdmissibilityError("B != O violated");
    return inv(b) * a;
}

Scalar ratio3(const Scalar& a, const Scalar& b, const Scalar& c) {
    detail::require_same_field(a, b, "ratio3");
    detail::require_same_field(a, c, "ratio3");
    if (b == c) throw AdmissibilityError("B != C violated");
    return inv(b - c) * (a - c);
}

CrossRatioInput CrossRatioInput::make(ExtendedScalar a, ExtendedScalar b,
                                      ExtendedScalar c, ExtendedScalar d) {
    int infinite = a.is_infinity() + b.is_infinity() + c.is_infinity() + d.is_infinity();
    if (infinite > 1) throw AdmissibilityError("at most one infinite argument allowed");
    const FieldTag tag = a.field();
    if (b.field() != tag || c.field() != tag || d.field() != tag)
        throw FieldMismatchError("cross_ratio");
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

CrossRatioInput CrossRatioInput::of_scalars(const Scalar& a, const Scalar& b,
                                            const Scalar& c, const Scalar& d) {
    return make(a, b, c, d);
}

ExtendedScalar cross_ratio(const CrossRatioInput& in) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw AdmissibilityError(what);
    };
    if (in.a.is_infinity()) {
        const Scalar &b = in.b.finite(), &c = in.c.finite(), &d = in.d.finite();
        require(b != c, "B != C violated");
        return (b - d) * inv(b - c);
    }
    if (in.b.is_infinity()) {
        const Scalar &a = in.a.finite(), &c = in.c.finite(), &d = in.d.finite();
        require(a != d, "A != D violated");
        return inv(a - d) * (a - c);
    }
    if (in.c.is_infinity()) {
        const Scalar &a = in.a.finite(), &b = in.b.finite(), &d = in.d.finite();
        require(a != d, "A != D violated");
        return inv(a - d) * (b - d);
    }
    if (in.d.is_infinity()) {
        const Scalar &a = in.a.finite(), &b = in.b.finite(), &c = in.c.finite();
        require(b != c, "B != C violated");
        return inv(b - c) * (a - c);
    }
    const Scalar &a = in.a.finite(), &b = in.b.finite(), &c = in.c.finite(), &d = in.d.finite();
    require(a != d, "A != D violated");
    require(b != c, "B != C violated");
    return (inv(a - d) * (b - d)) * (inv(b - c) * (a - c));
}

// ---------------------------------------------------------------- catalog

namespace {

struct IdentityInfo {
    IdentityId id;
    const char* name;
    const char* formula;
    int arity;
    bool commutative_only;
    bool conditional;
};

constexpr std::array<IdentityInfo, kIdentityCount> kCatalog{{
    {IdentityId::R1, "R1", "r(B:A) = r(A:B)^-1", 2, false, false},
    {IdentityId::R2, "R2", "r(A+B:C) = r(A:C) + r(B:C)", 3, false, false},
    {IdentityId::R3, "R3", "r(A*B:C) = r(A:C) * B", 3, false, false},
    {IdentityId::R4, "R4", "r(A:B*C) = C^-1 * r(A:B)", 3, false, false},
    {IdentityId::R5, "R5", "[r(A:B) = r(B:A)] = [A = B]  (domain A != -B)", 2, false, true},
    {IdentityId::R6, "R6", "r(-A,-B;-C) = r(A,B;C)", 3, false, false},
    {IdentityId::R7, "R7", "r(A,B;C)^-1 = r(B,A;C)", 3, false, false},
    {IdentityId::R8, "R8", "r(A^-1,B^-1;C^-1) = B * r(A,B;C) * A^-1", 3, false, false},
    {IdentityId::R9, "R9", "r(A^-1,B^-1;C^-1) = r(A,B;C) * r(B,A;O)", 3, true, false},
    {IdentityId::C0, "C0", "c_r(-A,-B;-C,-D) = c_r(A,B;C,D)", 4, false, false},
    {IdentityId::C1, "C1", "c_r(A,B;C,D)^-1 = c_r(A,B;D,C)", 4, false, false},
    {IdentityId::C2, "C2", "I - c_r(A,B;C,D) = c_r(A,C;B,D)", 4, false, false},
    {IdentityId::C3, "C3", "c_r(A,D;B,C) = I - c_r(A,B;C,D)^-1", 4, false, false},
    {IdentityId::C4, "C4", "c_r(A,C;D,B) = [I - c_r(A,B;C,D)]^-1", 4, false, false},
    {IdentityId::C5, "C5", "c_r(A,D;C,B) = [c_r(A,B;C,D) - I]^-1 * c_r(A,B;C,D)", 4, false, false},
    {IdentityId::C6, "C6", "c_r(A^-1,B^-1;C^-1,D^-1) = A * c_r(A,B;C,D) * A^-1", 4, false, false},
    {IdentityId::C7, "C7", "A central => c_r(A,B;C,D) = c_r(A^-1,B^-1;C^-1,D^-1)", 4, false, true},
    {IdentityId::C8, "C8", "conditions (a)-(d) => c_r(A,B;C,D) = c_r(B,A;D,C)", 4, false, true},
    {IdentityId::C9, "C9", "c_r(A,B;C,D) = r(B,A;D) * r(A,B;C)", 4, false, false},
    {IdentityId::C10, "C10", "c_r(inf,B;C,D) = r(C,D;B)^-1  and  c_r(A,inf;C,D) = r(C,D;A)", 4,
     true, false},
}};

const IdentityInfo& info(IdentityId id) { return kCatalog[static_cast<std::size_t>(id)]; }

Scalar indicator(FieldTag tag, bool value) {
    return value ? Scalar::one(tag) : Scalar::zero(tag);
}

bool pairwise_distinct(std::span<const Scalar> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

bool any_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (s.is_zero()) return true;
    return false;
}

} // namespace

std::vector<IdentityId> all_identities() {
    std::vector<IdentityId> out;
    for (const auto& e : kCatalog) out.push_back(e.id);
    return out;
}

const char* identity_name(IdentityId id) { return info(id).name; }
const char* identity_formula(IdentityId id) { return info(id).formula; }
int identity_arity(IdentityId id) { return info(id).arity; }
bool identity_commutative_only(IdentityId id) { return info(id).commutative_only; }
bool identity_conditional(IdentityId id) { return info(id).conditional; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (const auto& e : kCatalog)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::vector<IdentityId> claimed_identities(FieldTag field) {
    std::vector<IdentityId> out;
    for (const auto& e : kCatalog) {
        if (is_commutative(field)) {
            out.push_back(e.id);
            continue;
        }
        switch (e.id) {
            case IdentityId::R9:
            case IdentityId::C2:
            case IdentityId::C3:
            case IdentityId::C4:
            case IdentityId::C5:
            case IdentityId::C9:
            case IdentityId::C10:
                break; // conformance-reported over quaternions, not asserted
            default:
                out.push_back(e.id);
        }
    }
    return out;
}

// ------------------------------------------------------------- evaluation

IdentityOutcome check_identity(IdentityId id, std::span<const Scalar> sample, CrossRatioFn cr) {
    IdentityOutcome out;
    if (static_cast<int>(sample.size()) != identity_arity(id)) {
        out.skip_reason = "wrong sample arity";
        return out;
    }
    const FieldTag tag = sample[0].field();
    auto skip = [&](std::string reason) {
        out.status = IdentityOutcome::Status::Skipped;
        out.skip_reason = std::move(reason);
        return out;
    };
    auto crv = [&](const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
        return cr(CrossRatioInput::of_scalars(a, b, c, d));
    };

    ExtendedScalar lhs, rhs;
    try {
        switch (id) {
            case IdentityId::R1: {
                const Scalar &A = sample[0], &B = sample[1];
                if (A.is_zero()) return skip("A = O");
                if (B.is_zero()) return skip("B = O");
                lhs = ext_inv(ExtendedScalar(ratio2(A, B)));
                rhs = ratio2(B, A);
                break;
            }
            case IdentityId::R2: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2];
                if (C.is_zero()) return skip("C = O");
                lhs = ratio2(A + B, C);
                rhs = ratio2(A, C) + ratio2(B, C);
                break;
            }
            case IdentityId::R3: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2];
                if (C.is_zero()) return skip("C = O");
                lhs = ratio2(A * B, C);
                rhs = ratio2(A, C) * B;
                break;
            }
            case IdentityId::R4: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2];
                if (B.is_zero()) return skip("B = O");
                if (C.is_zero()) return skip("C = O");
                lhs = ratio2(A, B * C);
                rhs = inv(C) * ratio2(A, B);
                break;
            }
            case IdentityId::R5: {
                const Scalar &A = sample[0], &B = sample[1];
                if (A.is_zero()) return skip("A = O");
                if (B.is_zero()) return skip("B = O");
                if (A == -B) return skip("A = -B outside the claimed domain");
                lhs = indicator(tag, ratio2(A, B) == ratio2(B, A));
                rhs = indicator(tag, A == B);
                break;
            }
            case IdentityId::R6: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2];
                if (B == C) return skip("B = C");
                lhs = ratio3(-A, -B, -C);
                rhs = ratio3(A, B, C);
                break;
            }
            case IdentityId::R7: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2];
                if (B == C) return skip("B = C");
                if (A == C) return skip("A = C");
                lhs = ext_inv(ExtendedScalar(ratio3(A, B, C)));
                rhs = ratio3(B, A, C);
                break;
            }
            case IdentityId::R8:
            case IdentityId::R9: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2];
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                if (any_zero(sample)) return skip("point equals O");
                lhs = ratio3(inv(A), inv(B), inv(C));
                rhs = id == IdentityId::R8
                          ? B * ratio3(A, B, C) * inv(A)
                          : ratio3(A, B, C) * ratio3(B, A, Scalar::zero(tag));
                break;
            }
            case IdentityId::C0: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                lhs = crv(-A, -B, -C, -D);
                rhs = crv(A, B, C, D); // resolved right-hand side
                break;
            }
            case IdentityId::C1: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                lhs = ext_inv(crv(A, B, C, D));
                rhs = crv(A, B, D, C);
                break;
            }
            case IdentityId::C2: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                lhs = Scalar::one(tag) - crv(A, B, C, D).finite();
                rhs = crv(A, C, B, D);
                break;
            }
            case IdentityId::C3: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                lhs = crv(A, D, B, C);
                rhs = Scalar::one(tag) - inv(crv(A, B, C, D).finite());
                break;
            }
            case IdentityId::C4: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                lhs = crv(A, C, D, B);
                rhs = inv(Scalar::one(tag) - crv(A, B, C, D).finite());
                break;
            }
            case IdentityId::C5: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                Scalar v = crv(A, B, C, D).finite();
                lhs = crv(A, D, C, B);
                rhs = inv(v - Scalar::one(tag)) * v;
                break;
            }
            case IdentityId::C6: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                if (any_zero(sample)) return skip("point equals O");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                lhs = crv(inv(A), inv(B), inv(C), inv(D));
                rhs = A * crv(A, B, C, D).finite() * inv(A);
                break;
            }
            case IdentityId::C7: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                if (!is_central(A)) return skip("A not central");
                if (any_zero(sample)) return skip("point equals O");
                if (A == D) return skip("A = D");
                if (B == C) return skip("B = C");
                lhs = crv(A, B, C, D);
                rhs = crv(inv(A), inv(B), inv(C), inv(D));
                break;
            }
            case IdentityId::C8: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                // (d) is implied by each of (a)-(c), so it validates all four.
                if (!commutes(ratio3(A, B, D), ratio3(A, B, C)))
                    return skip("no sufficient condition holds");
                lhs = crv(A, B, C, D);
                rhs = crv(B, A, D, C);
                break;
            }
            case IdentityId::C9: {
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                if (A == D) return skip("A = D");
                if (B == C) return skip("B = C");
                lhs = crv(A, B, C, D);
                rhs = ratio3(B, A, D) * ratio3(A, B, C);
                break;
            }
            case IdentityId::C10: {
                if (!pairwise_distinct(sample)) return skip("points not distinct");
                const Scalar &A = sample[0], &B = sample[1], &C = sample[2], &D = sample[3];
                const ExtendedScalar infty = ExtendedScalar::infinity(tag);
                ExtendedScalar l1 = cr(CrossRatioInput::make(infty, B, C, D));
                ExtendedScalar r1 = ext_inv(ExtendedScalar(ratio3(C, D, B)));
                ExtendedScalar l2 = cr(CrossRatioInput::make(A, infty, C, D));
                ExtendedScalar r2 = ExtendedScalar(ratio3(C, D, A));
                if (l1 != r1) { lhs = l1; rhs = r1; }
                else if (l2 != r2) { lhs = l2; rhs = r2; }
                else { lhs = l1; rhs = r1; }
                break;
            }
        }
    } catch (const AdmissibilityError& e) {
        return skip(std::string("degenerate sample: ") + e.what());
    } catch (const ZeroInverseError& e) {
        return skip(std::string("degenerate sample: ") + e.what());
    }

    out.status = IdentityOutcome::Status::Checked;
    out.result = IdentityCheckResult{id, {sample.begin(), sample.end()}, lhs, rhs, lhs == rhs};
    return out;
}

// -------------------------------------------------------------- generators

namespace {

std::vector<Scalar> draw_until(SplitMix64& g, FieldTag tag, std::int64_t bound, int n,
                               bool (*ok)(std::span<const Scalar>), const char* what) {
    for (int t = 0; t < kMaxRejects; ++t) {
        std::vector<Scalar> v;
        v.reserve(n);
        for (int k = 0; k < n; ++k) v.push_back(gen_scalar(g, tag, bound));
        if (ok(v)) return v;
    }
    throw GenerationError(what);
}

bool distinct_ok(std::span<const Scalar> v) { return pairwise_distinct(v); }
bool distinct_nonzero_ok(std::span<const Scalar> v) {
    return pairwise_distinct(v) && !any_zero(v);
}

} // namespace

std::vector<Scalar> gen_identity_sample(IdentityId id, SplitMix64& g, FieldTag tag,
                                        std::int64_t bound, long index) {
    switch (id) {
        case IdentityId::R1:
            return {gen_nonzero(g, tag, bound), gen_nonzero(g, tag, bound)};
        case IdentityId::R2:
        case IdentityId::R3:
            return {gen_scalar(g, tag, bound), gen_scalar(g, tag, bound),
                    gen_nonzero(g, tag, bound)};
        case IdentityId::R4:
            return {gen_scalar(g, tag, bound), gen_nonzero(g, tag, bound),
                    gen_nonzero(g, tag, bound)};
        case IdentityId::R5: {
            Scalar b = gen_nonzero(g, tag, bound);
            if (index % 4 == 0) return {b, b}; // exercise the A = B branch
            for (int t = 0; t < kMaxRejects; ++t) {
                Scalar a = gen_nonzero(g, tag, bound);
                if (a != -b) return {a, b};
            }
            throw GenerationError("R5 sample");
        }
        case IdentityId::R6: {
            for (int t = 0; t < kMaxRejects; ++t) {
                Scalar a = gen_scalar(g, tag, bound);
                Scalar b = gen_scalar(g, tag, bound);
                Scalar c = gen_scalar(g, tag, bound);
                if (b != c) return {a, b, c};
            }
            throw GenerationError("R6 sample");
        }
        case IdentityId::R7: {
            for (int t = 0; t < kMaxRejects; ++t) {
                Scalar a = gen_scalar(g, tag, bound);
                Scalar b = gen_scalar(g, tag, bound);
                Scalar c = gen_scalar(g, tag, bound);
                if (b != c && a != c) return {a, b, c};
            }
            throw GenerationError("R7 sample");
        }
        case IdentityId::R8:
        case IdentityId::R9:
            return draw_until(g, tag, bound, 3, distinct_nonzero_ok, "distinct nonzero triple");
        case IdentityId::C0:
        case IdentityId::C1:
        case IdentityId::C2:
        case IdentityId::C3:
        case IdentityId::C4:
        case IdentityId::C5:
        case IdentityId::C10:
            return draw_until(g, tag, bound, 4, distinct_ok, "distinct quadruple");
        case IdentityId::C6:
            return draw_until(g, tag, bound, 4, distinct_nonzero_ok, "distinct nonzero quadruple");
        case IdentityId::C7: {
            for (int t = 0; t < kMaxRejects; ++t) {
                Scalar a = gen_central_nonzero(g, tag, bound);
                Scalar b = gen_nonzero(g, tag, bound);
                Scalar c = gen_nonzero(g, tag, bound);
                Scalar d = gen_nonzero(g, tag, bound);
                if (a != d && b != c) return {a, b, c, d};
            }
            throw GenerationError("C7 sample");
        }
        case IdentityId::C8: {
            // Cycle the four sufficient conditions; (b)-(d) are constructed,
            // not rejection-sampled, since they are sparse over quaternions.
            for (int t = 0; t < kMaxRejects; ++t) {
                std::vector<Scalar> s;
                switch (index % 4) {
                    case 0: { // (a) four central points
                        s = {gen_central(g, tag, bound), gen_central(g, tag, bound),
                             gen_central(g, tag, bound), gen_central(g, tag, bound)};
                        break;
                    }
                    case 1: { // (b) r(A,B;C) central: A = C + (B-C) z
                        Scalar b = gen_scalar(g, tag, bound);
                        Scalar c = gen_scalar(g, tag, bound);
                        Scalar d = gen_scalar(g, tag, bound);
                        Scalar z = gen_central_nonzero(g, tag, bound);
                        if (b == c) continue;
                        s = {c + (b - c) * z, b, c, d};
                        break;
                    }
                    case 2: { // (c) r(B,A;D) central: B = D + (A-D) z
                        Scalar a = gen_scalar(g, tag, bound);
                        Scalar c = gen_scalar(g, tag, bound);
                        Scalar d = gen_scalar(g, tag, bound);
                        Scalar z = gen_central_nonzero(g, tag, bound);
                        if (a == d) continue;
                        s = {a, d + (a - d) * z, c, d};
                        break;
                    }
                    default: { // (d) commuting ratio points from one subfield
                        Scalar c = gen_scalar(g, tag, bound);
                        Scalar d = gen_scalar(g, tag, bound);
                        Scalar u = gen_scalar(g, tag, bound);
                        Scalar v = gen_central(g, tag, bound) + gen_central(g, tag, bound) * u;
                        Scalar w = gen_central(g, tag, bound) + gen_central(g, tag, bound) * u;
                        if (v == w) continue;
                        Scalar b = (d - c + c * v - d * w) * inv(v - w);
                        s = {c + (b - c) * v, b, c, d};
                        break;
                    }
                }
                if (pairwise_distinct(s)) return s;
            }
            throw GenerationError("C8 sample");
        }
        case IdentityId::C9: {
            for (int t = 0; t < kMaxRejects; ++t) {
                auto s = std::vector<Scalar>{gen_scalar(g, tag, bound), gen_scalar(g, tag, bound),
                                             gen_scalar(g, tag, bound), gen_scalar(g, tag, bound)};
                if (s[0] != s[3] && s[1] != s[2]) return s;
            }
            throw GenerationError("C9 sample");
        }
    }
    throw Error("bad identity id");
}

} // namespace crossline
