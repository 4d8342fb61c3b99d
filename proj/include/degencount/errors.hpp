#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degencount {

/// Malformed input (edge lists, pattern specs). Carries the 1-based line
/// number when one applies, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, std::size_t line = 0) :
        std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Structurally invalid graph input: self-loops, mismatched sizes, cycles
/// where a DAG is required.
class GraphError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or brute-force guard would be exceeded.
class GuardExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal invariant broken. Never expected on valid inputs; indicates a bug.
class ContractViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace degencount
