// errors.hpp — exception types shared by the solvspec library
#pragma once

#include <stdexcept>
#include <string>

namespace solvspec {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dimensionally invalid unit conversion or out-of-domain physical input.
class UnitError : public Error {
public:
    using Error::Error;
};

// Invalid model parameters (geometry, dielectric constants, weights, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Numerical failure: singular configuration, divergent integral,
// oscillatory quadrature breakdown.
class NumericError : public Error {
public:
    using Error::Error;
};

// Fit failures that are not plain non-convergence (those are flagged on the
// result instead).
class FitError : public Error {
public:
    using Error::Error;
};

// Malformed input data (correlation files, reference tables).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace solvspec
