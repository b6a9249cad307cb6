#pragma once

#include <stdexcept>
#include <string>

namespace incdom {

// Argument errors use std::invalid_argument, range errors std::out_of_range,
// inadmissible design parameters std::domain_error.

/// An operation was called on input that violates its documented
/// precondition (e.g. a non-dominating set passed to a minimality test).
class PreconditionError : public std::logic_error {
public:
    PreconditionError(const std::string& what, std::string witness = {})
        : std::logic_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// Malformed text input; `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace incdom
