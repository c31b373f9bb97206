#pragma once

#include <Eigen/Dense>

#include "h2hinf/errors.hpp"

namespace h2hinf {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct StabilityReport {
  double spectral_radius;
  double max_real_eig;
  bool is_schur;    // spectral_radius < 1
  bool is_hurwitz;  // max_real_eig < 0
};

// max |lambda_i(M)| over the (complex) eigenvalues. M must be square.
double spectral_radius(const Mat& M);

// max_i Re(lambda_i(M)). M must be square.
double max_real_eig(const Mat& M);

StabilityReport analyze_stability(const Mat& M);

// Unique symmetric X with A'XA - X + Q = 0, for rho(A) < 1 and symmetric Q.
// Solved by Kronecker vectorization; output symmetrized.
Mat solve_dlyap(const Mat& A, const Mat& Q);

// Unique symmetric X with A'X + XA + Q = 0, for A Hurwitz and symmetric Q.
Mat solve_clyap(const Mat& A, const Mat& Q);

Mat kron(const Mat& A, const Mat& B);

inline Mat symmetrize(const Mat& X) { return 0.5 * (X + X.transpose()); }

// Smallest eigenvalue of the symmetric part of X.
double min_eig_sym(const Mat& X);
double max_eig_sym(const Mat& X);

bool is_symmetric(const Mat& X, double tol = 1e-10);

// Symmetric PSD square root via eigendecomposition. Eigenvalues below
// -1e-12*|lambda_max| are rejected; tiny negatives are clamped to zero.
Mat sym_sqrt(const Mat& W);

}  // namespace h2hinf
