// errors.hpp — error types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace nmflow {

// Adaptive quadrature failed to reach the requested tolerance. Carries the
// best value obtained and the achieved error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}
    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

// Relaxation rate requested at (or too close to) a zero of the amplitude
// function, where the time-local rate diverges while the state stays finite.
class SingularRateError : public std::runtime_error {
public:
    SingularRateError(const std::string& what, double t)
        : std::runtime_error(what), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

// Adaptive ODE step size underflowed, typically when integrating across a
// rate singularity. Carries the time at which progress stopped.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double t)
        : std::runtime_error(what), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

// Requested horizon would overflow exp(Gamma) during integral assembly.
class HorizonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Bloch state with p1 == p2 (maximally mixed) has no preferred directions.
class DegenerateStateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace nmflow
