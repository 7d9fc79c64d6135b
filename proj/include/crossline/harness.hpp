#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "crossline/line_arith.hpp"
#include "crossline/ratios.hpp"
#include "crossline/transforms.hpp"

namespace crossline {

using ordered_json = nlohmann::ordered_json;

enum class SuiteId {
    FieldAxioms,
    PlaneAxioms,
    Desargues,
    LineArithAgreement,
    AuxIndependence,
    IdentityCatalog,
    Invariance,
    Preservation,
    MobiusNormalization,
    Composition,
};

const char* suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(std::string_view name);
std::vector<SuiteId> all_suites();

/// Deliberately corrupted implementations shipped as test fixtures; each
/// must trip at least one exact counterexample over quaternions, proving
/// the suites can fail.
enum class Mutation {
    None,
    CrossRatioReordered, // product brackets of the cross-ratio swapped
    DilationRightMul,    // plane dilation multiplies on the right
    InversionBothSided,  // line inversion applies P * A * P
};

const char* mutation_name(Mutation m);
std::optional<Mutation> mutation_from_name(std::string_view name);

/// The swapped-bracket cross-ratio fixture (exposed for tests).
ExtendedScalar cross_ratio_reordered(const CrossRatioInput& in);

struct SuiteConfig {
    SuiteId suite = SuiteId::FieldAxioms;
    FieldTag field = FieldTag::Rational;
    long samples = 100;
    std::uint64_t seed = 0;
    std::int64_t bound = 10;
    int workers = 1;
    std::vector<IdentityId> identities;       // empty: the claimed set of the field
    std::vector<std::string> transform_kinds; // empty: every kind of the suite
    std::optional<DesarguesCase> desargues_case; // unset: alternate by sample
    Mutation mutation = Mutation::None;
};

/// Aggregated result of one suite run. Counterexample is the first failing
/// sample in sample order (present iff failed > 0); passed + failed +
/// skipped = run. A run with passed + failed = 0 is inconclusive.
struct SuiteReport {
    std::string suite;
    std::string field;
    std::uint64_t seed = 0;
    long run = 0;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    ordered_json counterexample; // null when failed = 0
    long long ms = 0;            // wall time; not part of the JSON contract

    bool inconclusive() const { return passed + failed == 0; }
};

/// Draws per-sample sub-seeds by counter, so the report content is
/// identical for every worker count.
SuiteReport run_suite(const SuiteConfig& cfg);

/// JSON schema {"suite","field","seed","samples","passed","failed",
/// "skipped","counterexample","ms"}. The ms slot is emitted as 0 so that
/// equal configurations serialize byte-identically; wall time is reported
/// in the text rendering only.
std::string report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

/// Transform kind names accepted by the invariance / preservation suites.
const std::vector<std::string>& invariance_kinds();
const std::vector<std::string>& preservation_kinds();

// ------------------------------------------------------------ conformance

struct ConformanceRow {
    std::string identity;
    std::string field;
    std::string status; // holds | fails | conditional | inconclusive
    long checked = 0;
    long skipped = 0;
    std::string note;
    ordered_json counterexample; // null unless status = fails
};

/// Identity-by-field conformance table, including the resolved
/// geometric-multiplication factor order and the resolved right-hand side
/// of the negated-tuple identity C0.
struct ConformanceReport {
    std::uint64_t seed = 0;
    long samples = 0;
    std::string mul_order;
    std::string c0_resolution;
    std::vector<ConformanceRow> rows;
};

ConformanceReport conformance_report(std::uint64_t seed, long samples);
std::string conformance_to_json(const ConformanceReport& r);
std::string conformance_to_text(const ConformanceReport& r);

} // namespace crossline
