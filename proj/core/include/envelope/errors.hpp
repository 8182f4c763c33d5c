#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace envelope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A term was evaluated at a point where it diverges.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A term or residual evaluated to a non-finite number.
class NumericError : public Error {
public:
    NumericError(const std::string& what, double at)
        : Error(what + " (at x = " + std::to_string(at) + ")"), at_(at) {}

    double at() const noexcept { return at_; }

private:
    double at_;
};

/// The target function does not change sign over the supplied bracket.
class NoBracketError : public Error {
public:
    using Error::Error;
};

/// The solver reports no usable solution inside the requested range.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// The radial oracle found no bound state below the continuum.
class UnboundSpectrumError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration text; line and column are 1-based, 0 when unknown.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace envelope
