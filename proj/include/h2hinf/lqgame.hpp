#pragma once

#include "h2hinf/plant.hpp"

namespace h2hinf {

// Zero-sum LQ game: x_{t+1} = Ax + Bu + Dv, stage payoff
// x'Qx + u'Ru u - v'Rv v, minimizer u = -Kx, maximizer v = -Lx.
struct GameSpec {
  Mat A;       // m x m
  Mat B;       // m x d
  Mat D;       // m x n
  Mat Q;       // m x m, > 0
  Mat Ru;      // d x d, > 0
  Mat Rv;      // n x n, > 0
  Mat Sigma0;  // m x m, >= 0, initial-state covariance
};

GameSpec make_game(Mat A, Mat B, Mat D, Mat Q, Mat Ru, Mat Rv, Mat Sigma0);

// Bridge from a mixed-design plant: Q = C'C, Ru = R, Rv = gamma^2 I.
// Sigma0 defaults to the identity.
GameSpec game_from_plant(const Plant& plant, const Mat* Sigma0 = nullptr);

struct GameValue {
  Mat P;        // solution of the policy-pair Lyapunov equation
  double cost;  // tr(P Sigma0)
};

// Value of a stabilizing pair (K, L):
//   P = Q + K'Ru K - L'Rv L + (A-BK-DL)' P (A-BK-DL).
GameValue game_value(const GameSpec& spec, const Mat& K, const Mat& L);

struct BestResponse {
  Mat L;  // maximizing disturbance gain L(K)
  Mat P;  // P_K^* = P_{K, L(K)}
};

// Maximizer over L for fixed K, through the Riccati equation with attenuation
// weight Rv (identical to the mixed-design policy Riccati with gamma^2 I
// replaced by Rv). Requires Rv - D'PD > 0 along the way.
BestResponse best_response_L(const GameSpec& spec, const Mat& K);

struct NashSolution {
  Mat K_star;
  Mat L_star;
  Mat P_star;
  double gare_residual;         // block-form GARE residual, Frobenius norm
  bool value_matrix_certified;  // residual, gain identities, and closed-loop checks all pass
};

// Nash equilibrium via the nested route: the modified Riccati recursion on K
// with Rv playing the attenuation weight; the block-inverse GARE form is used
// only as a residual check.
NashSolution solve_gare(const GameSpec& spec, double tol = 1e-10, int max_iter = 100000);

// Closed-loop state correlation Sigma_{K,L} = sum_t Acl^t Sigma0 (Acl^t)'.
Mat state_correlation(const GameSpec& spec, const Mat& K, const Mat& L);

// Exact policy gradients of C(K, L) = tr(P_{K,L} Sigma0):
//   grad_K = 2[(Ru + B'PB)K - B'P(A-DL)] Sigma_{K,L}
//   grad_L = 2[(-Rv + D'PD)L - D'P(A-BK)] Sigma_{K,L}
Mat game_grad_K(const GameSpec& spec, const Mat& K, const Mat& L);
Mat game_grad_L(const GameSpec& spec, const Mat& K, const Mat& L);

}  // namespace h2hinf
