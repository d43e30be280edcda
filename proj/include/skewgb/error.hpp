#pragma once

#include <stdexcept>
#include <string>

namespace skewgb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// API misuse: mixed ring/algebra specs, rank mismatches, bad arguments.
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

/// Operation not available for the given algebra (e.g. basis completion
/// on a non-quasi-commutative extension).
class UnsupportedOperation : public Error {
public:
    explicit UnsupportedOperation(const std::string& msg) : Error(msg) {}
};

/// Text input could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0), col(0) {}
    int line;
    int col;
};

/// An internal identity that must hold by construction failed. Indicates a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace skewgb
