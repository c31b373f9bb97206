#include "h2hinf/lqgame.hpp"

#include "h2hinf/riccati.hpp"

namespace h2hinf {

GameSpec make_game(Mat A, Mat B, Mat D, Mat Q, Mat Ru, Mat Rv, Mat Sigma0) {
  const Eigen::Index m = A.rows();
  if (A.cols() != m || m == 0) throw DimensionError("make_game: A must be square");
  if (B.rows() != m || D.rows() != m) throw DimensionError("make_game: B, D must have m rows");
  if (Q.rows() != m || Q.cols() != m || !is_symmetric(Q) || min_eig_sym(Q) <= 0.0) {
    throw DimensionError("make_game: Q must be symmetric positive definite");
  }
  if (Ru.rows() != B.cols() || Ru.cols() != B.cols() || min_eig_sym(Ru) <= 0.0) {
    throw DimensionError("make_game: Ru must be d x d positive definite");
  }
  if (Rv.rows() != D.cols() || Rv.cols() != D.cols() || min_eig_sym(Rv) <= 0.0) {
    throw DimensionError("make_game: Rv must be n x n positive definite");
  }
  if (Sigma0.rows() != m || Sigma0.cols() != m ||
      min_eig_sym(Sigma0) < -1e-10 * (1.0 + Sigma0.norm())) {
    throw DimensionError("make_game: Sigma0 must be m x m positive semidefinite");
  }
  return {std::move(A), std::move(B), std::move(D), symmetrize(Q),
          symmetrize(Ru), symmetrize(Rv), symmetrize(Sigma0)};
}

GameSpec game_from_plant(const Plant& plant, const Mat* Sigma0) {
  const Mat S0 = Sigma0 ? *Sigma0 : Mat::Identity(plant.nx(), plant.nx());
  return make_game(plant.A, plant.B, plant.D, plant.ctc, plant.R,
                   plant.gamma * plant.gamma * Mat::Identity(plant.nw(), plant.nw()), S0);
}

GameValue game_value(const GameSpec& spec, const Mat& K, const Mat& L) {
  const Mat Acl = spec.A - spec.B * K - spec.D * L;
  if (spectral_radius(Acl) >= 1.0) {
    throw InstabilityError("game_value: rho(A - BK - DL) >= 1");
  }
  const Mat Qbar = spec.Q + K.transpose() * spec.Ru * K - L.transpose() * spec.Rv * L;
  const Mat P = solve_dlyap(Acl, Qbar);
  return {P, (P * spec.Sigma0).trace()};
}

BestResponse best_response_L(const GameSpec& spec, const Mat& K) {
  const Mat Acl = spec.A - spec.B * K;
  if (spectral_radius(Acl) >= 1.0) {
    throw InstabilityError("best_response_L: rho(A - BK) >= 1");
  }
  const Mat Qbar = spec.Q + K.transpose() * spec.Ru * K;
  PolicyRiccatiResult r =
      solve_policy_riccati_fixed_point(Acl, Qbar, spec.D, spec.Rv, 1e-12, 200000);
  if (r.outcome == RiccatiOutcome::infeasible) {
    throw InfeasibilityError("best_response_L: Rv - D'PD lost definiteness (bound violated)");
  }
  if (r.outcome == RiccatiOutcome::no_convergence) {
    throw ConvergenceError("best_response_L: recursion did not converge");
  }
  // L(K) = (-Rv + D'PD)^{-1} D'P(A-BK)
  const Mat M = spec.D.transpose() * r.P * spec.D - spec.Rv;
  const Mat L = M.ldlt().solve(spec.D.transpose() * r.P * Acl);
  return {L, r.P};
}

NashSolution solve_gare(const GameSpec& spec, double tol, int max_iter) {
  OptimalGain sol;
  try {
    sol = solve_optimal_modified_riccati_weighted(spec.A, spec.B, spec.D, spec.Q, spec.Ru,
                                                  spec.Rv, tol, max_iter, &spec.Q);
  } catch (const InfeasibilityError&) {
    throw InfeasibilityError("solve_gare: no stabilizing equilibrium with Rv - D'P*D > 0");
  }
  NashSolution ne;
  ne.P_star = sol.P;
  ne.K_star = sol.K;
  const Mat M = spec.D.transpose() * sol.P * spec.D - spec.Rv;
  ne.L_star = M.ldlt().solve(spec.D.transpose() * sol.P * (spec.A - spec.B * ne.K_star));

  // Residual check through the block-inverse GARE form.
  const Eigen::Index d = spec.B.cols(), n = spec.D.cols();
  Mat blk(d + n, d + n);
  blk.topLeftCorner(d, d) = spec.Ru + spec.B.transpose() * sol.P * spec.B;
  blk.topRightCorner(d, n) = spec.B.transpose() * sol.P * spec.D;
  blk.bottomLeftCorner(n, d) = spec.D.transpose() * sol.P * spec.B;
  blk.bottomRightCorner(n, n) = spec.D.transpose() * sol.P * spec.D - spec.Rv;
  Mat S(spec.A.rows(), d + n);
  S.leftCols(d) = spec.A.transpose() * sol.P * spec.B;
  S.rightCols(n) = spec.A.transpose() * sol.P * spec.D;
  const Mat res = spec.A.transpose() * sol.P * spec.A + spec.Q -
                  S * blk.partialPivLu().solve(S.transpose()) - sol.P;
  ne.gare_residual = res.norm();

  // Closed-form gain identities and closed-loop stability.
  const Mat Ptilde = tilde_p_weighted(sol.P, spec.D, spec.Rv);
  const Mat K_cf = (spec.Ru + spec.B.transpose() * Ptilde * spec.B)
                       .ldlt()
                       .solve(spec.B.transpose() * Ptilde * spec.A);
  const Mat Ru_g = spec.Ru + spec.B.transpose() * sol.P * spec.B;
  const Mat L_inner = spec.D.transpose() *
                          (sol.P - sol.P * spec.B * Ru_g.ldlt().solve(spec.B.transpose() * sol.P)) *
                          spec.D -
                      spec.Rv;
  const Mat L_cf = L_inner.partialPivLu().solve(
      spec.D.transpose() * sol.P *
      (spec.A - spec.B * Ru_g.ldlt().solve(spec.B.transpose() * sol.P * spec.A)));
  const double scale = 1.0 + sol.P.norm();
  const bool gains_ok = (K_cf - ne.K_star).norm() <= 1e3 * tol * scale &&
                        (L_cf - ne.L_star).norm() <= 1e3 * tol * scale;
  const bool loop_ok =
      spectral_radius(spec.A - spec.B * ne.K_star - spec.D * ne.L_star) < 1.0;
  const bool gap_ok = min_eig_sym(spec.Rv - spec.D.transpose() * sol.P * spec.D) > 0.0;
  ne.value_matrix_certified =
      gains_ok && loop_ok && gap_ok && ne.gare_residual <= 1e3 * tol * scale;
  return ne;
}

Mat state_correlation(const GameSpec& spec, const Mat& K, const Mat& L) {
  const Mat Acl = spec.A - spec.B * K - spec.D * L;
  if (spectral_radius(Acl) >= 1.0) {
    throw InstabilityError("state_correlation: closed loop is unstable");
  }
  // Sigma = Sigma0 + Acl Sigma Acl'  <=>  dlyap in Acl'.
  return solve_dlyap(Acl.transpose(), spec.Sigma0);
}

Mat game_grad_K(const GameSpec& spec, const Mat& K, const Mat& L) {
  const GameValue gv = game_value(spec, K, L);
  const Mat Sigma = state_correlation(spec, K, L);
  return 2.0 *
         ((spec.Ru + spec.B.transpose() * gv.P * spec.B) * K -
          spec.B.transpose() * gv.P * (spec.A - spec.D * L)) *
         Sigma;
}

Mat game_grad_L(const GameSpec& spec, const Mat& K, const Mat& L) {
  const GameValue gv = game_value(spec, K, L);
  const Mat Sigma = state_correlation(spec, K, L);
  return 2.0 *
         ((spec.D.transpose() * gv.P * spec.D - spec.Rv) * L -
          spec.D.transpose() * gv.P * (spec.A - spec.B * K)) *
         Sigma;
}

}  // namespace h2hinf
