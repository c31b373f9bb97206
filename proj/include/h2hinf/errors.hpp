#pragma once

#include <stdexcept>
#include <string>

namespace h2hinf {

// Inputs with inconsistent or non-square dimensions.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A gain (or system matrix) fails the stability precondition.
struct InstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The attenuation bound is violated: a policy Riccati solve lost positive
// definiteness or diverged, certifying ||T(K)||_inf >= gamma.
struct InfeasibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iteration hit its budget without meeting the tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A linear solve or factorization broke down.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its budget.
struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sampled covariance is unusable even after regularization.
struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace h2hinf
