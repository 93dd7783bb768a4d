#pragma once

#include <stdexcept>
#include <string>

namespace floqamp {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear system at (or numerically indistinguishable from) a resonance.
struct SingularSystemError : NumericalError {
    SingularSystemError(const std::string& what, double cond)
        : NumericalError(what), cond(cond) {}
    double cond;
};

// Blowup or step-size underflow during time integration.
struct DivergenceError : NumericalError {
    DivergenceError(const std::string& what, double t)
        : NumericalError(what), last_valid_time(t) {}
    double last_valid_time;
};

// Successive quadrature refinements disagree beyond tolerance.
struct QuadratureError : NumericalError {
    QuadratureError(const std::string& what, double disagreement)
        : NumericalError(what), disagreement(disagreement) {}
    double disagreement;
};

}  // namespace floqamp
