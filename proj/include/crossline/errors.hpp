#pragma once

#include <stdexcept>
#include <string>

namespace crossline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two scalar operands carry different field tags.
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& op)
        : Error("field mismatch in " + op) {}
};

/// Multiplicative inverse of zero requested in a finite (non-extended) context.
class ZeroInverseError : public Error {
public:
    ZeroInverseError() : Error("inverse of zero") {}
    explicit ZeroInverseError(const std::string& ctx) : Error("inverse of zero in " + ctx) {}
};

/// Malformed scalar/point literal; position is the byte offset of the offense.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

/// An extended-arithmetic form the calculus leaves undefined (e.g. inf * 0).
class UndefinedFormError : public Error {
public:
    explicit UndefinedFormError(const std::string& form)
        : Error("undefined extended form: " + form) {}
};

/// Two coincident points where distinct ones are required.
class DegeneratePairError : public Error {
public:
    DegeneratePairError() : Error("degenerate pair: points coincide") {}
};

/// intersect() called on two representations of the same line.
class CoincidentLinesError : public Error {
public:
    CoincidentLinesError() : Error("coincident lines have no unique intersection") {}
};

/// A point required to lie on a line does not.
class IncidenceError : public Error {
public:
    explicit IncidenceError(const std::string& what_point)
        : Error("incidence violation: " + what_point) {}
};

/// Auxiliary construction point lies on the base line.
class AuxiliaryPointError : public Error {
public:
    AuxiliaryPointError() : Error("auxiliary point must not lie on the base line") {}
};

/// A construction step degenerated (required intersection does not exist).
class ConstructionDegeneracyError : public Error {
public:
    explicit ConstructionDegeneracyError(const std::string& step)
        : Error("construction degenerate at step " + step) {}
};

/// Desargues configuration violates a hypothesis clause; names the clause.
class InvalidConfigurationError : public Error {
public:
    explicit InvalidConfigurationError(const std::string& clause)
        : Error("invalid configuration: " + clause), failed_clause(clause) {}
    std::string failed_clause;
};

/// A ratio / cross-ratio precondition failed; names the violated constraint.
class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(const std::string& constraint)
        : Error(constraint), violated(constraint) {}
    std::string violated;
};

/// Bounded rejection sampling exhausted its retry budget.
class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& what_for)
        : Error("generator exhausted retries for " + what_for) {}
};

/// Operation defined for a subset of the fields only (e.g. SVG rendering).
class UnsupportedFieldError : public Error {
public:
    explicit UnsupportedFieldError(const std::string& op)
        : Error(op + " is not supported for this field") {}
};

/// Unknown suite id passed to the harness.
class UnknownSuiteError : public Error {
public:
    explicit UnknownSuiteError(const std::string& name)
        : Error("unknown suite: " + name) {}
};

} // namespace crossline
