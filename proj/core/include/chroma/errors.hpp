#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or inconsistent graph input (disconnected, unmatched rotation
// entries, loops, non-spherical embedding, ...).
struct GraphError : Error {
    explicit GraphError(const std::string& what) : Error(what) {}
};

// Malformed textual or binary input.  `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    std::size_t line;
};

// An exact search exceeded its configured budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace chroma
