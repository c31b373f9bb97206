#include "h2hinf/leqg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "h2hinf/riccati.hpp"

namespace h2hinf {

namespace {

void validate(const LeqgProblem& p) {
  const Eigen::Index m = p.A.rows();
  if (p.A.cols() != m || m == 0) throw DimensionError("leqg: A must be square");
  if (p.B.rows() != m) throw DimensionError("leqg: B must be m x d");
  if (p.Q.rows() != m || p.Q.cols() != m || min_eig_sym(p.Q) <= 0.0) {
    throw DimensionError("leqg: Q must be m x m positive definite");
  }
  if (p.R.rows() != p.B.cols() || min_eig_sym(p.R) <= 0.0) {
    throw DimensionError("leqg: R must be d x d positive definite");
  }
  if (p.W.rows() != m || p.W.cols() != m || min_eig_sym(p.W) <= 0.0) {
    throw DimensionError("leqg: W must be m x m positive definite");
  }
  if (!std::isfinite(p.beta)) throw DimensionError("leqg: beta must be finite");
  if (!(p.beta > 0.0)) {
    throw DimensionError("leqg: beta must be positive (risk-seeking is out of scope)");
  }
}

// -beta^{-1} sum log(1 - beta*lambda_i) over the eigenvalues of
// W^{1/2} P W^{1/2}; equals -beta^{-1} logdet(I - beta P W) and keeps the
// evaluation symmetric.
double logdet_cost(const Mat& P, const Mat& W, double beta) {
  const Mat Wh = sym_sqrt(W);
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(Wh * P * Wh), Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = 1.0 - beta * es.eigenvalues()(i);
    if (!(v > 0.0)) throw InfeasibilityError("leqg_cost: I - beta P W is not positive definite");
    acc += std::log(v);
  }
  return -acc / beta;
}

}  // namespace

Plant leqg_to_mixed(const LeqgProblem& p) {
  validate(p);
  return make_plant(p.A, p.B, sym_sqrt(p.W), p.Q, p.R, 1.0 / std::sqrt(p.beta));
}

double leqg_cost(const LeqgProblem& p, const Mat& K) {
  const Plant plant = leqg_to_mixed(p);
  const RiccatiCertificate cert = solve_dare_policy(plant, K, 1e-12, 200000);
  if (!cert.feasible) {
    throw InfeasibilityError("leqg_cost: K is outside the LEQG feasible set");
  }
  return logdet_cost(cert.P, p.W, p.beta);
}

LeqgSolution leqg_optimal(const LeqgProblem& p) {
  const Plant plant = leqg_to_mixed(p);
  const OptimalGain sol = solve_optimal_modified_riccati(plant, 1e-12, 200000);
  // W^{-1} - beta P* > 0 is gamma^2 I - D'PD > 0 under D = W^{1/2}; already
  // certified by the solver, so only the cost remains.
  return {sol.K, logdet_cost(sol.P, p.W, p.beta)};
}

}  // namespace h2hinf
