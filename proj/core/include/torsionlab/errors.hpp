#ifndef TORSIONLAB_ERRORS_HPP
#define TORSIONLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsionlab {

enum class ErrorCode {
    context_mismatch,
    usage,
    commutativity,
    parse_syntax,
    parse_zero_denominator,
    parse_unknown_variable,
    parse_negative_exponent,
    scene_duplicate_name,
    scene_index_range,
    scene_missing_chart,
    internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Two values built over different variable contexts were combined.
class ContextError : public Error {
public:
    explicit ContextError(const std::string& message)
        : Error(ErrorCode::context_mismatch, message) {}
};

/// Bad arguments: wrong arity, level < 1, empty operator list, ...
class UsageError : public Error {
public:
    explicit UsageError(const std::string& message)
        : Error(ErrorCode::usage, message) {}
};

/// A check that requires pairwise commuting operators was given a
/// non-commuting family.
class CommutativityError : public Error {
public:
    explicit CommutativityError(const std::string& message)
        : Error(ErrorCode::commutativity, message) {}
};

/// Polynomial or scene text failed to parse. Carries 1-based position.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, int line, int column)
        : Error(code, message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class SceneError : public Error {
public:
    SceneError(ErrorCode code, const std::string& message, int line)
        : Error(code, message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An invariant the theory guarantees was violated; indicates an engine bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message)
        : Error(ErrorCode::internal, message) {}
};

} // namespace torsionlab

#endif
