#pragma once

#include <stdexcept>
#include <string>

namespace qdesign {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (non-prime-power q, m out of range, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Work or memory would exceed a configured budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Strict construction saw a rank-deficient generator.
class RankError : public Error {
public:
    using Error::Error;
};

// Value outside the domain of a partial function (inverse or log of zero).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed text input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A self-check that must never fail did fail.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qdesign
