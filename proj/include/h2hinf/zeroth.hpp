#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "h2hinf/lqgame.hpp"
#include "h2hinf/polgrad.hpp"
#include "h2hinf/rng.hpp"

namespace h2hinf {

struct RolloutConfig {
  int m_traj = 100;          // trajectories per estimate
  int horizon = 100;         // rollout length
  double radius = 0.1;       // smoothing radius r
  std::uint64_t seed = 0;
  Mat init_cov;              // x0 covariance; empty means identity
  bool exact_oracle = false; // replace rollouts with model-based C(K,L) and Sigma_{K,L}
};

struct GradSigmaEstimate {
  Mat grad_hat;
  Mat sigma_hat;
  int n_samples = 0;
};

struct Rollout {
  std::vector<double> costs;   // c_t = x_t'(Q + K'Ru K - L'Rv L)x_t, t = 0..horizon-1
  std::vector<Vec> states;
};

// Uniform draw on the Frobenius sphere of radius r (Gaussian direction,
// normalized).
Mat sphere_sample(SplitMix64& rng, int rows, int cols, double radius);

// Deterministic rollout of the closed loop A - BK - DL from x0 ~ N(0, init_cov),
// seeded. Instability is the caller's concern; overflow shows up as non-finite
// costs.
Rollout simulate(const GameSpec& spec, const Mat& K, const Mat& L, int horizon,
                 std::uint64_t seed, const Mat* init_cov = nullptr);

// One-point gradient and correlation estimate at L for fixed K: perturb L on
// the sphere, roll out (or query the exact oracle), and average
// (d~/r^2) C_i U_i. Trajectory i draws from the substream (seed, i).
GradSigmaEstimate est(const GameSpec& spec, const Mat& K, const Mat& L,
                      const RolloutConfig& cfg);

// Same estimator driven by an arbitrary cost functional; sigma_hat is the
// zero matrix. This is the hook both est() and the tests build on.
GradSigmaEstimate est_with_cost(const std::function<double(const Mat&)>& cost_of_L, const Mat& L,
                                const RolloutConfig& cfg);

enum class GameUpdate { policy_gradient, natural_pg };

// Ascent iteration L <- L + alpha * grad (NPG right-multiplies the
// regularized inverse of sigma_hat). In exact_oracle mode the analytic
// gradient and correlation replace the estimates.
Mat inner_ng(const GameSpec& spec, const Mat& K, const Mat& L0, const RolloutConfig& cfg,
             int n_iter, double alpha, GameUpdate variant);

// Outer loop on K: per step, estimate grad_K C(K, L(K)) through sphere
// perturbations and nested inner_ng calls (cold-started from L = 0), then
// descend. The trace records the exact model-based C(K_t, L(K_t)) per step;
// brl_margin carries lambda_min(Rv - D'P D) at the best response, so a
// negative value flags K_t leaving the game-feasible set.
IterationTrace outer_ng(const GameSpec& spec, const Mat& K0, const RolloutConfig& cfg,
                        int n_outer, int n_inner, double eta, double alpha, GameUpdate variant);

}  // namespace h2hinf
