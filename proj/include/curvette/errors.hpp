#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvette {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two values from groups/series of different ambient rank were combined.
class RankMismatch : public Error {
public:
    using Error::Error;
};

// Tuples of different length were compared.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// The valuation (or inverse) of the zero series was requested.
// Callers that want the nu(0) = infinity convention catch this at the
// point layer, where values are optional.
class ZeroSeries : public Error {
public:
    using Error::Error;
};

// A negative sign axis met a non-integer exponent coordinate.
class NonIntegerSignedExponent : public Error {
public:
    using Error::Error;
};

// A chart asked to invert a coordinate that lies in the support.
class ChartOnSupport : public Error {
public:
    using Error::Error;
};

// A monomial substitution needed the inverse of a support coordinate.
class SupportObstruction : public Error {
public:
    using Error::Error;
};

// A chart violates the validity constraint for the point's classification.
class InvalidChart : public Error {
public:
    using Error::Error;
};

// Truncated expansion did not reach the frontier within its budget.
// Happens when infinitely many exponents of the exact quotient lie below
// the frontier, which lexicographic exponent groups allow.
class ExpansionBudgetExceeded : public Error {
public:
    using Error::Error;
};

// Text input (expression or scalar string) failed to parse.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Structured input (JSON document, descriptor, matrix) failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace curvette
