#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace c4gb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data does not satisfy a structural precondition (exit code 2 in the CLI).
struct DimensionMismatch : Error {
    using Error::Error;
};

struct ClosureViolation : Error {
    ClosureViolation(std::vector<int> element_, int axis_, const std::string& what_)
        : Error(what_), element(std::move(element_)), axis(axis_) {}
    std::vector<int> element;  // the offending exponent
    int axis;                  // 1-based coordinate whose predecessor is missing
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct ZeroDivision : Error {
    using Error::Error;
};

struct DuplicatePoints : Error {
    using Error::Error;
};

struct DuplicateEvaluationPoints : Error {
    using Error::Error;
};

// A configurable resource guard tripped (exit code 3 in the CLI).
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// The basis reduction demanded a polynomial outside the proven precedence
// order; indicates an implementation bug, not bad input.
struct InternalReductionFailure : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace c4gb
