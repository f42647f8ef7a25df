#pragma once

#include <stdexcept>
#include <string>

namespace almg {

/// Invalid model or command parameters (N odd, gamma out of range, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A point outside the mathematical domain of an operation
/// (phase-space disk, coherent-state parametrization).
struct DomainError : ParameterError {
    using ParameterError::ParameterError;
};

/// Numerical failure (eigensolver non-convergence, singular system).
/// `index` carries the failing eigenvalue index where applicable, else -1.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg, long failing_index = -1)
        : std::runtime_error(msg), index(failing_index) {}
    long index;
};

}  // namespace almg
