#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hurstlab {

/// Base class for every domain error thrown by the library.
/// The CLI maps these to exit code 1; usage errors map to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// series ---------------------------------------------------------------

class NonPositivePrice : public Error {
public:
    NonPositivePrice(std::size_t index, double value)
        : Error("non-positive price at value index " + std::to_string(index) +
                " (" + std::to_string(value) + "); log-returns need strictly positive prices"),
          index(index),
          value(value) {}

    std::size_t index;  // 0-based position in the raw value sequence
    double value;
};

class TooShort : public Error {
public:
    using Error::Error;
};

class WindowOutOfBounds : public Error {
public:
    using Error::Error;
};

// divisor --------------------------------------------------------------

class NotEnoughDivisors : public Error {
public:
    using Error::Error;
};

class PlanViolatesInvariants : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

// dfa ------------------------------------------------------------------

class NotADivisor : public Error {
public:
    using Error::Error;
};

class BoxTooSmall : public Error {
public:
    using Error::Error;
};

/// F(N) vanished: the detrended profile is identically zero (constant or
/// exactly piecewise-linear input), so log F is undefined.
class DegenerateFluctuation : public Error {
public:
    using Error::Error;
};

class TooFewPoints : public Error {
public:
    using Error::Error;
};

// synth ----------------------------------------------------------------

/// A circulant eigenvalue fell below -tolerance.  The fGn embedding is
/// provably nonnegative definite, so this signals an implementation bug
/// rather than a user error.
class EmbeddingNotPSD : public Error {
public:
    using Error::Error;
};

// mc -------------------------------------------------------------------

class EmptySamples : public Error {
public:
    using Error::Error;
};

class AllDegenerate : public Error {
public:
    using Error::Error;
};

// io -------------------------------------------------------------------

class CsvParseError : public Error {
public:
    CsvParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}

    std::size_t line;  // 1-based line number in the input file
};

// cli ------------------------------------------------------------------

/// Command-line usage errors (unknown flag, missing required option,
/// invalid value).  Not an Error subclass: the CLI exits 2 for these.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownFlag : public UsageError {
public:
    using UsageError::UsageError;
};

class MissingRequired : public UsageError {
public:
    using UsageError::UsageError;
};

class InvalidValue : public UsageError {
public:
    using UsageError::UsageError;
};

}  // namespace hurstlab
