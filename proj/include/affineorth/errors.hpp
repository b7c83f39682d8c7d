#pragma once

// Error taxonomy shared by all modules.

#include <stdexcept>
#include <string>

namespace affineorth {

// Evaluating a field outside its domain, or getting a non-finite value.
struct EvaluationError : std::runtime_error {
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// A metric (or metric-like matrix) failed positivity / invertibility.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Dimension or index mismatch (wrong rank, odd size, out-of-range index).
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented operation precondition was violated (non-skew input, open loop,
// parameter outside its range, singular frame change).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// ODE / quadrature state became non-finite.
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace affineorth
