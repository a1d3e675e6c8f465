#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bipart {

// Bad arguments, malformed input, violated preconditions. CLI maps this to exit code 1.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed edge-list input; carries the 1-based line number.
struct ParseError : ValidationError {
    ParseError(std::size_t line_no, const std::string& what)
        : ValidationError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

// An exact/dense computation was asked to exceed its configured size budget.
// CLI maps this to exit code 2.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bipart
