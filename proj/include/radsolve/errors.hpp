#pragma once

#include <stdexcept>
#include <string>

namespace radsolve {

/// Base class for solver failures that are data-dependent rather than
/// programming errors (those use std::invalid_argument).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mie-family state with E >= c; no decaying exponential branch exists.
struct NotBoundState : SolverError {
    using SolverError::SolverError;
};

/// Numerical eigenvalue did not meet the requested refinement tolerance.
struct ConvergenceError : SolverError {
    using SolverError::SolverError;
};

/// The k-th numerical eigenvector does not have k interior sign changes
/// (grid too coarse or box too small).
struct NodeMismatchError : SolverError {
    using SolverError::SolverError;
};

/// Integrand has not decayed at the outer edge of the quadrature domain.
struct TailError : SolverError {
    using SolverError::SolverError;
};

/// A B_{n+1} coefficient vanished, leaving the recursion underdetermined.
struct DegenerateRecursion : SolverError {
    using SolverError::SolverError;
};

/// Configuration file problem; message carries file/field diagnostics.
struct ConfigError : SolverError {
    using SolverError::SolverError;
};

} // namespace radsolve
