#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Gate or circuit construction that violates a structural invariant.
class InvalidCircuit : public Error {
public:
    using Error::Error;
};

/// Operation on circuits whose widths or wire orders do not agree.
class WidthMismatch : public Error {
public:
    using Error::Error;
};

/// A cost table has no entry for a gate's control count.
class MissingCost : public Error {
public:
    explicit MissingCost(std::size_t controls);

    std::size_t controls() const noexcept { return controls_; }

private:
    std::size_t controls_;
};

/// Circuit width above the configured simulation cap.
class WidthLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Generator rejection sampling ran out of attempts.
class GeneratorExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace revid
