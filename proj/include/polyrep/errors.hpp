#pragma once

#include <stdexcept>
#include <string>

namespace polyrep {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

struct InconsistentRadical : Error {
    explicit InconsistentRadical(const std::string& what) : Error(what) {}
};

struct FuelExhausted : Error {
    FuelExhausted() : Error("rewrite fuel exhausted (non-terminating presentation?)") {}
};

struct MixedPresentation : Error {
    explicit MixedPresentation(const std::string& what) : Error(what) {}
};

// Parser diagnostics carry a 1-based line/column position.
struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& what, int line_, int col_)
        : Error(what + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), column(col_) {}
};

struct SyntaxError : ParseError {
    using ParseError::ParseError;
};

struct UnknownIdent : ParseError {
    using ParseError::ParseError;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

struct JacobiViolation : ValidationError {
    explicit JacobiViolation(const std::string& what) : ValidationError(what) {}
};

struct WeightGuardViolation : ValidationError {
    explicit WeightGuardViolation(const std::string& what) : ValidationError(what) {}
};

struct CasimirNotCentral : ValidationError {
    explicit CasimirNotCentral(const std::string& what) : ValidationError(what) {}
};

struct IncompleteCommTable : ValidationError {
    explicit IncompleteCommTable(const std::string& what) : ValidationError(what) {}
};

struct BaseRuleDenominatorZero : Error {
    explicit BaseRuleDenominatorZero(const std::string& what) : Error(what) {}
};

struct NonClosing : Error {
    explicit NonClosing(const std::string& what) : Error(what) {}
};

struct NotInSpan : Error {
    explicit NotInSpan(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct Unreachable : Error {
    explicit Unreachable(const std::string& what) : Error(what) {}
};

} // namespace polyrep
