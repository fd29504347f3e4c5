#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regulus {

// Evaluation requested outside the mathematical domain of an operation
// (division by zero, inverse of the zero quaternion, reciprocal at a zero
// of the function, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse: arguments that are structurally invalid regardless of value
// (coordinate index outside 1..4, and the like).
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

// A finite-difference computation could not be trusted: the map was
// non-smooth at the requested scale, or a stencil point left the domain.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Axial extraction is ill-posed where q2^2 + q3^2 + q4^2 is (numerically)
// zero; raised instead of returning garbage components.
struct TooCloseToRealAxis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A chart map was applied to a point outside the chart's domain.
struct ChartDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two charts with empty overlap have no transition map.
struct EmptyOverlap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure; `offset` is the byte offset into the source text and
// `expected` describes the token set that would have been accepted.
struct SyntaxError : std::runtime_error {
    std::size_t offset;
    std::string expected;

    SyntaxError(std::size_t offset_, std::string expected_, const std::string& what_)
        : std::runtime_error(what_), offset(offset_), expected(std::move(expected_)) {}
};

// A recognized function call with the wrong number of arguments.
struct ArityError : std::runtime_error {
    std::size_t offset;

    ArityError(std::size_t offset_, const std::string& what_)
        : std::runtime_error(what_), offset(offset_) {}
};

}  // namespace regulus
