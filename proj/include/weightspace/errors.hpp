#pragma once

#include <stdexcept>
#include <string>

namespace wspace {

/// Malformed or unsupported input: bad graph text, a precondition the caller
/// violated, a claw handed to a claw-free-only routine.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when text cannot be parsed into a graph. `line()` is 1-based; 0 means
/// the problem is not tied to a single line (e.g. the edge count is short).
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check_invariant(bool condition, const char* what) {
    if (!condition) throw InvariantViolation(what);
}

}  // namespace wspace
