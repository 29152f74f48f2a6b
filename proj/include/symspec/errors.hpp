#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symspec {

// Thrown when a requested representation would exceed the configured
// dimension cap (dense products and eigensolves are O(f^3)).
struct DimensionCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when theta is requested for a shape with fewer than two boxes.
struct DegenerateShapeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Shape-spec parse failure; position is the offset of the offending token.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Surfaced eigensolver non-convergence; never silently truncated.
struct EigenSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symspec
