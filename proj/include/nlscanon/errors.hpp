#pragma once

#include <stdexcept>
#include <string>

namespace nlscanon {

// Base class for all library failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient or field returned a non-finite value.
class EvaluationError : public Error {
public:
    using Error::Error;
};

// a(t) vanished (or similar) where a formula divides by it.
class SingularCoefficientError : public Error {
public:
    using Error::Error;
};

// Adaptive ODE integration could not proceed; carries the last reachable time.
class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, double last_t)
        : Error(what), last_time(last_t) {}
    double last_time;
};

// Adaptive quadrature failed to converge; message carries the bisection trace.
class QuadratureError : public Error {
public:
    using Error::Error;
};

// alpha(0) + gamma0(t) = 0 or mu0(t) = 0: transformation formulas have a pole.
class FocalPointError : public Error {
public:
    FocalPointError(const std::string& what, double t) : Error(what), time(t) {}
    double time;
};

// Parameters outside a solution family's existence region.
class DomainError : public Error {
public:
    using Error::Error;
};

// Grid shape/spacing violations or mismatched grids.
class GridError : public Error {
public:
    using Error::Error;
};

// Requested point falls outside the chart covered by a transformation frame.
class OutOfChartError : public Error {
public:
    using Error::Error;
};

// Spatial resolution insufficient (spectral tail carries norm) or decay
// precondition violated at the window boundary.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Scattering data unusable (singular GLM system, coincident eigenvalues, ...).
class ScatteringDataError : public Error {
public:
    using Error::Error;
};

} // namespace nlscanon
