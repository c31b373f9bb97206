#include "h2hinf/zeroth.hpp"

#include <cmath>
#include <limits>

namespace h2hinf {

namespace {

Mat gaussian_matrix(SplitMix64& rng, int rows, int cols) {
  Mat G(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) G(i, j) = rng.gaussian();
  }
  return G;
}

Vec gaussian_vector(SplitMix64& rng, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
  return v;
}

Rollout rollout_with_rng(const GameSpec& spec, const Mat& K, const Mat& L, int horizon,
                         SplitMix64& rng, const Mat* init_cov) {
  const int m = static_cast<int>(spec.A.rows());
  const Mat cov_root =
      init_cov && init_cov->size() > 0 ? sym_sqrt(*init_cov) : Mat::Identity(m, m);
  const Mat Acl = spec.A - spec.B * K - spec.D * L;
  const Mat Qbar = spec.Q + K.transpose() * spec.Ru * K - L.transpose() * spec.Rv * L;
  Rollout r;
  r.costs.reserve(horizon);
  r.states.reserve(horizon);
  Vec x = cov_root * gaussian_vector(rng, m);
  for (int t = 0; t < horizon; ++t) {
    r.states.push_back(x);
    r.costs.push_back(x.dot(Qbar * x));
    x = Acl * x;
  }
  return r;
}

// Regularized inverse application: X * (S + eps*I)^{-1} with
// eps = 1e-8 * tr(S)/dim.
Mat apply_sigma_inverse(const Mat& X, const Mat& S) {
  const double tr = S.trace();
  if (!std::isfinite(tr) || tr <= 0.0) {
    throw EstimationError("sigma_hat is not usable (nonpositive or non-finite trace)");
  }
  const double eps = 1e-8 * tr / static_cast<double>(S.rows());
  const Mat reg = symmetrize(S) + eps * Mat::Identity(S.rows(), S.cols());
  Eigen::LDLT<Mat> ldlt(reg);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw EstimationError("sigma_hat is singular beyond regularization");
  }
  return ldlt.solve(X.transpose()).transpose();
}

}  // namespace

Mat sphere_sample(SplitMix64& rng, int rows, int cols, double radius) {
  Mat G = gaussian_matrix(rng, rows, cols);
  const double n = G.norm();
  if (n == 0.0) return sphere_sample(rng, rows, cols, radius);
  return (radius / n) * G;
}

Rollout simulate(const GameSpec& spec, const Mat& K, const Mat& L, int horizon,
                 std::uint64_t seed, const Mat* init_cov) {
  if (horizon < 1) throw DimensionError("simulate: horizon must be >= 1");
  SplitMix64 rng(seed);
  return rollout_with_rng(spec, K, L, horizon, rng, init_cov);
}

GradSigmaEstimate est_with_cost(const std::function<double(const Mat&)>& cost_of_L, const Mat& L,
                                const RolloutConfig& cfg) {
  const int d_tilde = static_cast<int>(L.size());
  const SplitMix64 parent(cfg.seed);
  GradSigmaEstimate out;
  out.grad_hat = Mat::Zero(L.rows(), L.cols());
  out.sigma_hat = Mat::Zero(L.rows(), L.rows());
  out.n_samples = cfg.m_traj;
  const double scale = d_tilde / (cfg.radius * cfg.radius);
  for (int i = 0; i < cfg.m_traj; ++i) {
    SplitMix64 stream = parent.stream(static_cast<std::uint64_t>(i));
    const Mat U = sphere_sample(stream, static_cast<int>(L.rows()),
                                static_cast<int>(L.cols()), cfg.radius);
    out.grad_hat += scale * cost_of_L(L + U) * U;
  }
  out.grad_hat /= static_cast<double>(cfg.m_traj);
  return out;
}

GradSigmaEstimate est(const GameSpec& spec, const Mat& K, const Mat& L,
                      const RolloutConfig& cfg) {
  const int d_tilde = static_cast<int>(L.size());
  const SplitMix64 parent(cfg.seed);
  GradSigmaEstimate out;
  out.grad_hat = Mat::Zero(L.rows(), L.cols());
  out.sigma_hat = Mat::Zero(spec.A.rows(), spec.A.rows());
  out.n_samples = cfg.m_traj;
  const double scale = d_tilde / (cfg.radius * cfg.radius);
  for (int i = 0; i < cfg.m_traj; ++i) {
    SplitMix64 stream = parent.stream(static_cast<std::uint64_t>(i));
    const Mat U = sphere_sample(stream, static_cast<int>(L.rows()),
                                static_cast<int>(L.cols()), cfg.radius);
    const Mat Lp = L + U;
    double C_i;
    Mat Sigma_i;
    if (cfg.exact_oracle) {
      C_i = game_value(spec, K, Lp).cost;
      Sigma_i = state_correlation(spec, K, Lp);
    } else {
      const Rollout r = rollout_with_rng(spec, K, Lp, cfg.horizon, stream,
                                         cfg.init_cov.size() > 0 ? &cfg.init_cov : nullptr);
      C_i = 0.0;
      Sigma_i = Mat::Zero(spec.A.rows(), spec.A.rows());
      for (int t = 0; t < cfg.horizon; ++t) {
        C_i += r.costs[static_cast<std::size_t>(t)];
        const Vec& x = r.states[static_cast<std::size_t>(t)];
        Sigma_i += x * x.transpose();
      }
    }
    out.grad_hat += scale * C_i * U;
    out.sigma_hat += Sigma_i;
  }
  out.grad_hat /= static_cast<double>(cfg.m_traj);
  out.sigma_hat /= static_cast<double>(cfg.m_traj);
  return out;
}

Mat inner_ng(const GameSpec& spec, const Mat& K, const Mat& L0, const RolloutConfig& cfg,
             int n_iter, double alpha, GameUpdate variant) {
  Mat L = L0;
  const SplitMix64 parent(cfg.seed);
  for (int tau = 0; tau < n_iter; ++tau) {
    Mat direction;
    if (cfg.exact_oracle) {
      const GameValue gv = game_value(spec, K, L);
      const Mat E = (spec.D.transpose() * gv.P * spec.D - spec.Rv) * L -
                    spec.D.transpose() * gv.P * (spec.A - spec.B * K);
      direction = variant == GameUpdate::natural_pg
                      ? Mat(2.0 * E)
                      : Mat(2.0 * E * state_correlation(spec, K, L));
    } else {
      RolloutConfig step_cfg = cfg;
      step_cfg.seed = parent.stream(static_cast<std::uint64_t>(tau)).stream(0).next();
      const GradSigmaEstimate e = est(spec, K, L, step_cfg);
      direction = variant == GameUpdate::natural_pg
                      ? apply_sigma_inverse(e.grad_hat, e.sigma_hat)
                      : e.grad_hat;
    }
    L += alpha * direction;
  }
  return L;
}

IterationTrace outer_ng(const GameSpec& spec, const Mat& K0, const RolloutConfig& cfg,
                        int n_outer, int n_inner, double eta, double alpha, GameUpdate variant) {
  IterationTrace trace;
  Mat K = K0;
  const SplitMix64 parent(cfg.seed);
  const int d_tilde = static_cast<int>(K.size());
  const double scale = d_tilde / (cfg.radius * cfg.radius);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const Mat L_cold = Mat::Zero(spec.D.cols(), spec.A.rows());

  for (int t = 0; t < n_outer; ++t) {
    TraceRow row;
    row.iteration = t;
    row.hinf = nan;
    row.K = K;
    // Model-based monitor: exact C(K_t, L(K_t)) and the game-feasibility
    // margin at the best response.
    try {
      const BestResponse br = best_response_L(spec, K);
      row.cost = (br.P * spec.Sigma0).trace();
      row.brl_margin = min_eig_sym(spec.Rv - spec.D.transpose() * br.P * spec.D);
    } catch (const std::runtime_error&) {
      row.cost = nan;
      row.brl_margin = -std::numeric_limits<double>::infinity();
      row.grad_norm_sq = nan;
      trace.rows.push_back(std::move(row));
      trace.converged = false;
      trace.stop_reason = "left game-feasible set";
      return trace;
    }

    Mat grad = Mat::Zero(K.rows(), K.cols());
    Mat sigma = Mat::Zero(spec.A.rows(), spec.A.rows());
    if (cfg.exact_oracle) {
      RolloutConfig inner_cfg = cfg;
      inner_cfg.seed = parent.stream(static_cast<std::uint64_t>(t)).next();
      const Mat L_hat = inner_ng(spec, K, L_cold, inner_cfg, n_inner, alpha, variant);
      const GameValue gv = game_value(spec, K, L_hat);
      const Mat E = (spec.Ru + spec.B.transpose() * gv.P * spec.B) * K -
                    spec.B.transpose() * gv.P * (spec.A - spec.D * L_hat);
      grad = variant == GameUpdate::natural_pg
                 ? Mat(2.0 * E)
                 : Mat(2.0 * E * state_correlation(spec, K, L_hat));
      row.grad_norm_sq = E.squaredNorm();
      trace.rows.push_back(std::move(row));
      K -= eta * grad;
    } else {
      SplitMix64 outer_stream = parent.stream(static_cast<std::uint64_t>(t));
      for (int i = 0; i < cfg.m_traj; ++i) {
        SplitMix64 stream = outer_stream.stream(static_cast<std::uint64_t>(i));
        const Mat V = sphere_sample(stream, static_cast<int>(K.rows()),
                                    static_cast<int>(K.cols()), cfg.radius);
        const Mat Kp = K + V;
        RolloutConfig inner_cfg = cfg;
        inner_cfg.seed = stream.next();
        const Mat L_hat = inner_ng(spec, Kp, L_cold, inner_cfg, n_inner, alpha, variant);
        const Rollout r = rollout_with_rng(spec, Kp, L_hat, cfg.horizon, stream,
                                           cfg.init_cov.size() > 0 ? &cfg.init_cov : nullptr);
        double C_i = 0.0;
        for (int s = 0; s < cfg.horizon; ++s) {
          C_i += r.costs[static_cast<std::size_t>(s)];
          const Vec& x = r.states[static_cast<std::size_t>(s)];
          sigma += x * x.transpose();
        }
        grad += scale * C_i * V;
      }
      grad /= static_cast<double>(cfg.m_traj);
      sigma /= static_cast<double>(cfg.m_traj);
      row.grad_norm_sq = grad.squaredNorm();
      trace.rows.push_back(std::move(row));
      K -= eta * (variant == GameUpdate::natural_pg ? apply_sigma_inverse(grad, sigma) : grad);
    }
  }
  trace.converged = true;
  trace.stop_reason = "n_outer reached";
  // Final iterate recorded so callers can read K_T off the trace.
  TraceRow last;
  last.iteration = n_outer;
  last.hinf = nan;
  last.grad_norm_sq = nan;
  last.K = K;
  try {
    const BestResponse br = best_response_L(spec, K);
    last.cost = (br.P * spec.Sigma0).trace();
    last.brl_margin = min_eig_sym(spec.Rv - spec.D.transpose() * br.P * spec.D);
  } catch (const std::runtime_error&) {
    last.cost = nan;
    last.brl_margin = -std::numeric_limits<double>::infinity();
    trace.converged = false;
    trace.stop_reason = "left game-feasible set";
  }
  trace.rows.push_back(std::move(last));
  return trace;
}

}  // namespace h2hinf
