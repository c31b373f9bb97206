#include "h2hinf/matlin.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace h2hinf {

namespace {

void require_square(const Mat& M, const char* who) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw DimensionError(std::string(who) + ": matrix must be square and nonempty");
  }
}

Eigen::VectorXcd eigenvalues_of(const Mat& M) {
  Eigen::EigenSolver<Mat> es(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed to converge");
  }
  return es.eigenvalues();
}

}  // namespace

double spectral_radius(const Mat& M) {
  require_square(M, "spectral_radius");
  return eigenvalues_of(M).cwiseAbs().maxCoeff();
}

double max_real_eig(const Mat& M) {
  require_square(M, "max_real_eig");
  return eigenvalues_of(M).real().maxCoeff();
}

StabilityReport analyze_stability(const Mat& M) {
  require_square(M, "analyze_stability");
  const Eigen::VectorXcd ev = eigenvalues_of(M);
  StabilityReport r;
  r.spectral_radius = ev.cwiseAbs().maxCoeff();
  r.max_real_eig = ev.real().maxCoeff();
  r.is_schur = r.spectral_radius < 1.0;
  r.is_hurwitz = r.max_real_eig < 0.0;
  return r;
}

Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

double min_eig_sym(const Mat& X) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(X), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eig_sym(const Mat& X) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(X), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

bool is_symmetric(const Mat& X, double tol) {
  if (X.rows() != X.cols()) return false;
  return (X - X.transpose()).cwiseAbs().maxCoeff() <= tol * (1.0 + X.cwiseAbs().maxCoeff());
}

Mat solve_dlyap(const Mat& A, const Mat& Q) {
  require_square(A, "solve_dlyap");
  if (Q.rows() != A.rows() || Q.cols() != A.cols()) {
    throw DimensionError("solve_dlyap: A and Q dimensions differ");
  }
  if (!is_symmetric(Q)) throw DimensionError("solve_dlyap: Q must be symmetric");
  if (spectral_radius(A) >= 1.0 - 1e-12) {
    throw InstabilityError("solve_dlyap: rho(A) >= 1");
  }
  // vec(A'XA) = (A' (x) A') vec(X), so (I - A'(x)A') vec(X) = vec(Q).
  const Eigen::Index n = A.rows();
  const Mat At = A.transpose();
  Mat lhs = Mat::Identity(n * n, n * n) - kron(At, At);
  Eigen::PartialPivLU<Mat> lu(lhs);
  Vec x = lu.solve(Eigen::Map<const Vec>(Q.data(), n * n));
  if (!x.allFinite()) throw NumericalError("solve_dlyap: singular Kronecker system");
  Mat X = Eigen::Map<Mat>(x.data(), n, n);
  return symmetrize(X);
}

Mat solve_clyap(const Mat& A, const Mat& Q) {
  require_square(A, "solve_clyap");
  if (Q.rows() != A.rows() || Q.cols() != A.cols()) {
    throw DimensionError("solve_clyap: A and Q dimensions differ");
  }
  if (!is_symmetric(Q)) throw DimensionError("solve_clyap: Q must be symmetric");
  if (max_real_eig(A) >= -1e-12) {
    throw InstabilityError("solve_clyap: A is not Hurwitz");
  }
  // vec(A'X + XA) = (I (x) A' + A' (x) I) vec(X) = -vec(Q).
  const Eigen::Index n = A.rows();
  const Mat At = A.transpose();
  const Mat In = Mat::Identity(n, n);
  Mat lhs = kron(In, At) + kron(At, In);
  Eigen::PartialPivLU<Mat> lu(lhs);
  Vec x = lu.solve(-Eigen::Map<const Vec>(Q.data(), n * n));
  if (!x.allFinite()) throw NumericalError("solve_clyap: singular Kronecker system");
  Mat X = Eigen::Map<Mat>(x.data(), n, n);
  return symmetrize(X);
}

Mat sym_sqrt(const Mat& W) {
  require_square(W, "sym_sqrt");
  if (!is_symmetric(W)) throw DimensionError("sym_sqrt: input must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(W));
  Vec lam = es.eigenvalues();
  const double scale = std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -1e-12 * scale) {
      throw NumericalError("sym_sqrt: matrix has a negative eigenvalue");
    }
    lam(i) = std::sqrt(std::max(lam(i), 0.0));
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace h2hinf
