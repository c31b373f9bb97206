#include "h2hinf/polgrad.hpp"

#include <cmath>
#include <limits>

#include "h2hinf/rng.hpp"

namespace h2hinf {

namespace {

RiccatiCertificate certified_solve(const Plant& plant, const Mat& K, TimeDomain domain) {
  const std::optional<RiccatiCertificate> rc =
      domain == TimeDomain::discrete ? try_dare_policy(plant, K, 1e-12, 200000)
                                     : try_care_policy(plant, K, 1e-12, 300);
  if (!rc) throw InstabilityError("K is not stabilizing");
  if (!rc->feasible) throw InfeasibilityError("K is outside the feasible set");
  return *rc;
}

double cost_of_certificate(const Plant& plant, const RiccatiCertificate& cert, CostForm form) {
  const Mat& P = cert.P;
  const Mat DDt = plant.D * plant.D.transpose();
  const double g2 = plant.gamma * plant.gamma;
  switch (form) {
    case CostForm::trace:
      return (P * DDt).trace();
    case CostForm::logdet: {
      const Mat M = Mat::Identity(plant.nx(), plant.nx()) - P * DDt / g2;
      const double det = M.partialPivLu().determinant();
      if (!(det > 0.0)) throw InfeasibilityError("cost: I - g^-2 P DD' is not positive");
      return -g2 * std::log(det);
    }
    case CostForm::trace_inv: {
      const Mat M = Mat::Identity(plant.nx(), plant.nx()) - DDt * P / g2;
      const Mat X = M.partialPivLu().solve(plant.D);
      return (plant.D.transpose() * P * X).trace();
    }
  }
  throw DimensionError("cost: unknown cost form");
}

}  // namespace

double cost(const Plant& plant, const Mat& K, CostForm form, TimeDomain domain) {
  return cost_of_certificate(plant, certified_solve(plant, K, domain), form);
}

namespace {

GradientBundle bundle_from_certificate(const Plant& plant, const Mat& K,
                                       const RiccatiCertificate& cert, TimeDomain domain);

}  // namespace

GradientBundle gradient_bundle(const Plant& plant, const Mat& K, TimeDomain domain) {
  return bundle_from_certificate(plant, K, certified_solve(plant, K, domain), domain);
}

namespace {

GradientBundle bundle_from_certificate(const Plant& plant, const Mat& K,
                                       const RiccatiCertificate& cert, TimeDomain domain) {
  const Mat Acl = plant.A - plant.B * K;
  GradientBundle gb;
  if (domain == TimeDomain::discrete) {
    const Mat& Pt = cert.P_tilde;
    gb.E = (plant.R + plant.B.transpose() * Pt * plant.B) * K -
           plant.B.transpose() * Pt * plant.A;
    // Delta_K = sum_t Abar^t F Abar'^t with Abar = (I - g^-2 P DD')^-T Acl and
    // F = D (g^2 I - D'PD)^{-1} D' g^2... forcing term D(I-g^-2 D'PD)^{-1}D'.
    const double g2 = plant.gamma * plant.gamma;
    const Mat M = Mat::Identity(plant.nx(), plant.nx()) -
                  cert.P * plant.D * plant.D.transpose() / g2;
    const Mat Abar = M.transpose().partialPivLu().solve(Acl);
    const Mat gap = Mat::Identity(plant.nw(), plant.nw()) -
                    plant.D.transpose() * cert.P * plant.D / g2;
    const Mat F = symmetrize(plant.D * gap.ldlt().solve(plant.D.transpose()));
    gb.delta = solve_dlyap(Abar.transpose(), F);
  } else {
    gb.E = plant.R * K - plant.B.transpose() * cert.P;
    const double g2 = plant.gamma * plant.gamma;
    const Mat DDt = plant.D * plant.D.transpose();
    const Mat Abar = Acl + DDt * cert.P / g2;
    gb.delta = solve_clyap(Abar.transpose(), DDt);
  }
  gb.grad = 2.0 * gb.E * gb.delta;
  return gb;
}

double theorem_stepsize(const Plant& plant, const RiccatiCertificate& cert, UpdateRule rule,
                        TimeDomain domain) {
  if (rule == UpdateRule::gauss_newton) return 0.5;
  if (rule == UpdateRule::natural_pg) {
    const Mat H = domain == TimeDomain::discrete
                      ? Mat(plant.R + plant.B.transpose() * cert.P_tilde * plant.B)
                      : plant.R;
    return 1.0 / (2.0 * H.operatorNorm());
  }
  throw DimensionError("theorem stepsize is defined only for NPG and Gauss-Newton");
}

Mat apply_update(const Plant& plant, const Mat& K, const GradientBundle& gb,
                 const RiccatiCertificate& cert, UpdateRule rule, double eta,
                 TimeDomain domain) {
  switch (rule) {
    case UpdateRule::policy_gradient:
      return K - eta * gb.grad;
    case UpdateRule::natural_pg:
      return K - 2.0 * eta * gb.E;
    case UpdateRule::gauss_newton: {
      const Mat H = domain == TimeDomain::discrete
                        ? Mat(plant.R + plant.B.transpose() * cert.P_tilde * plant.B)
                        : plant.R;
      return K - 2.0 * eta * H.ldlt().solve(gb.E);
    }
  }
  throw DimensionError("unknown update rule");
}

}  // namespace

StepResult step(const Plant& plant, const Mat& K, const OptimizerConfig& config,
                TimeDomain domain) {
  const RiccatiCertificate cert = certified_solve(plant, K, domain);
  GradientBundle gb;
  if (config.rule == UpdateRule::policy_gradient) {
    gb = gradient_bundle(plant, K, domain);
  } else {
    // NPG/GN need E only; reuse the certificate.
    gb.E = domain == TimeDomain::discrete
               ? Mat((plant.R + plant.B.transpose() * cert.P_tilde * plant.B) * K -
                     plant.B.transpose() * cert.P_tilde * plant.A)
               : Mat(plant.R * K - plant.B.transpose() * cert.P);
  }
  const double eta = config.stepsize_rule == StepsizeRule::theorem
                         ? theorem_stepsize(plant, cert, config.rule, domain)
                         : config.eta;
  StepResult out;
  out.K = apply_update(plant, K, gb, cert, config.rule, eta, domain);
  out.in_set = membership(plant, out.K, domain).in_set;
  return out;
}

IterationTrace run_optimizer(const Plant& plant, const Mat& K0, const OptimizerConfig& config,
                             TimeDomain domain) {
  IterationTrace trace;
  Mat K = K0;
  double eta_frozen = -1.0;
  double eta_pg = config.eta;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (int it = 0; it <= config.max_iter; ++it) {
    const std::optional<RiccatiCertificate> rc =
        domain == TimeDomain::discrete ? try_dare_policy(plant, K, 1e-12, 200000)
                                       : try_care_policy(plant, K, 1e-12, 300);
    if (!rc || !rc->feasible) {
      if (it == 0) throw InfeasibilityError("run_optimizer: K0 is outside the feasible set");
      trace.converged = false;
      trace.stop_reason = "feasibility violated";
      return trace;
    }
    const RiccatiCertificate& cert = *rc;

    GradientBundle gb = bundle_from_certificate(plant, K, cert, domain);
    TraceRow row;
    row.iteration = it;
    row.cost = cost_of_certificate(plant, cert, config.cost_form);
    row.grad_norm_sq = gb.E.squaredNorm();
    row.brl_margin = cert.brl_margin;
    row.hinf = nan;
    if (config.hinf_every > 0 && it % config.hinf_every == 0) {
      row.hinf = hinf_bisect(plant, K, domain, 1e-6).value;
    }
    row.K = K;
    trace.rows.push_back(std::move(row));

    const double stop_metric = config.rule == UpdateRule::policy_gradient
                                   ? gb.grad.squaredNorm()
                                   : gb.E.squaredNorm();
    if (stop_metric <= config.tol) {
      trace.converged = true;
      trace.stop_reason = "tolerance reached";
      return trace;
    }
    if (it == config.max_iter) break;

    double eta;
    if (config.stepsize_rule == StepsizeRule::theorem) {
      if (config.freeze_theorem_stepsize) {
        if (eta_frozen < 0.0) eta_frozen = theorem_stepsize(plant, cert, config.rule, domain);
        eta = eta_frozen;
      } else {
        eta = theorem_stepsize(plant, cert, config.rule, domain);
      }
    } else {
      eta = config.rule == UpdateRule::policy_gradient ? eta_pg : config.eta;
    }

    Mat Knext = apply_update(plant, K, gb, cert, config.rule, eta, domain);
    if (config.rule == UpdateRule::policy_gradient && config.pg_backtracking) {
      // Outside the paper's guarantees: halve the stepsize until the step
      // stays feasible, up to 60 halvings.
      int halvings = 0;
      while (!membership(plant, Knext, domain).in_set && halvings < 60) {
        eta_pg *= 0.5;
        Knext = apply_update(plant, K, gb, cert, config.rule, eta_pg, domain);
        ++halvings;
      }
      if (halvings == 60) {
        trace.converged = false;
        trace.stop_reason = "feasibility violated";
        return trace;
      }
    }
    K = std::move(Knext);
  }
  trace.converged = false;
  trace.stop_reason = "max_iter reached";
  return trace;
}

FeasibleInit find_feasible_init(const Plant& plant, TimeDomain domain, double box_half_width,
                                double gamma_slack, int max_tries, std::uint64_t seed,
                                bool induce_gamma) {
  SplitMix64 rng(seed);
  const int d = plant.nu(), m = plant.nx();
  for (int attempt = 1; attempt <= max_tries; ++attempt) {
    Mat K(d, m);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < m; ++j) K(i, j) = rng.uniform(-box_half_width, box_half_width);
    }
    const Mat Acl = plant.A - plant.B * K;
    const bool stabilizing = domain == TimeDomain::discrete ? spectral_radius(Acl) < 1.0
                                                            : max_real_eig(Acl) < 0.0;
    if (!stabilizing) continue;
    if (induce_gamma) {
      // Probe plant: gamma is irrelevant for the norm itself.
      const Plant probe = plant.gamma > 0.0 ? plant : plant.with_gamma(1.0);
      const double norm_k = hinf_bisect(probe, K, domain, 1e-9).value;
      const double gamma = (1.0 + gamma_slack) * std::max(norm_k, 1e-12);
      if (membership(plant.with_gamma(gamma), K, domain).in_set) {
        return {K, gamma, attempt};
      }
    } else {
      if (membership(plant, K, domain).in_set) {
        return {K, plant.gamma, attempt};
      }
    }
  }
  throw SearchError("find_feasible_init: no feasible gain within max_tries");
}

}  // namespace h2hinf
