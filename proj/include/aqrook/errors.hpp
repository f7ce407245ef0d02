#pragma once

#include <stdexcept>
#include <string>

namespace aqrook {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by a rational expression whose numerator is zero.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

/// A monomial carries an odd b-exponent where an even one is required.
struct OddBExponent : Error {
    explicit OddBExponent(const std::string& msg = "odd b-exponent") : Error(msg) {}
};

/// Evaluation point hits a pole (denominator vanishes).
struct EvalPole : Error {
    explicit EvalPole(const std::string& msg = "denominator vanishes at evaluation point") : Error(msg) {}
};

/// The a -> infinity limit does not exist (numerator dominates).
struct DivergentLimit : Error {
    explicit DivergentLimit(const std::string& msg = "limit diverges as a -> infinity") : Error(msg) {}
};

/// Column heights are not nondecreasing.
struct NotNondecreasing : Error {
    explicit NotNondecreasing(const std::string& msg = "column heights must be nondecreasing") : Error(msg) {}
};

/// A column height is negative.
struct NegativeHeight : Error {
    explicit NegativeHeight(const std::string& msg = "column heights must be nonnegative") : Error(msg) {}
};

/// Parameters of a named board family are out of range.
struct InvalidFamilyParams : Error {
    explicit InvalidFamilyParams(const std::string& msg = "invalid board family parameters") : Error(msg) {}
};

/// Appending the requested column would break the Ferrers property.
struct NotFerrersAfterAppend : Error {
    explicit NotFerrersAfterAppend(const std::string& msg = "appended column is lower than existing heights") : Error(msg) {}
};

/// Identity parameters make the written identity singular.
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& msg = "degenerate identity parameters") : Error(msg) {}
};

/// Malformed textual input (expression or board spec).
struct ParseError : Error {
    explicit ParseError(const std::string& msg = "parse error") : Error(msg) {}
};

}  // namespace aqrook
