#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "h2hinf/norms.hpp"

namespace h2hinf {

enum class UpdateRule { policy_gradient, natural_pg, gauss_newton };
enum class StepsizeRule { fixed, theorem };
enum class CostForm { trace, logdet, trace_inv };

struct OptimizerConfig {
  UpdateRule rule = UpdateRule::natural_pg;
  StepsizeRule stepsize_rule = StepsizeRule::theorem;  // theorem: NPG/GN only
  double eta = 0.0;                                    // used when fixed
  CostForm cost_form = CostForm::logdet;
  double tol = 1e-12;    // stop when ||E_K||_F^2 (PG: ||grad||_F^2) <= tol
  int max_iter = 10000;
  bool freeze_theorem_stepsize = false;  // evaluate the NPG bound at K0 only
  int hinf_every = 0;                    // 0: never compute the norm in the trace
  bool pg_backtracking = false;          // PG only: halve eta on infeasible step
};

// E is the natural-gradient direction: (R+B'Ptilde B)K - B'Ptilde A in
// discrete time, RK - B'P in continuous time. delta is Delta_K (discrete) or
// Lambda_K (continuous); grad = 2 E delta.
struct GradientBundle {
  Mat E;
  Mat delta;
  Mat grad;
};

struct TraceRow {
  int iteration;
  double cost;
  double grad_norm_sq;  // ||E_K||_F^2
  double hinf;          // NaN on iterations where it is not computed
  double brl_margin;
  Mat K;
};

struct IterationTrace {
  std::vector<TraceRow> rows;
  bool converged = false;
  std::string stop_reason;
};

// Cost of a certified K: J1 = tr(P DD'), J2 = -g^2 logdet(I - g^-2 P DD'),
// J3 = tr[D'P(I - g^-2 DD'P)^{-1} D]. Throws InfeasibilityError when K is
// outside the feasible set.
double cost(const Plant& plant, const Mat& K, CostForm form, TimeDomain domain);

GradientBundle gradient_bundle(const Plant& plant, const Mat& K, TimeDomain domain);

struct StepResult {
  Mat K;        // updated gain
  bool in_set;  // membership of the updated gain
};

// One update of the selected rule from a feasible K. With theorem stepsizes
// (NPG: 1/(2||R+B'Ptilde B||) discrete, 1/(2||R||) continuous; GN: 1/2) the
// updated gain stays feasible; PG carries no such guarantee and reports the
// violation through in_set.
StepResult step(const Plant& plant, const Mat& K, const OptimizerConfig& config,
                TimeDomain domain);

IterationTrace run_optimizer(const Plant& plant, const Mat& K0, const OptimizerConfig& config,
                             TimeDomain domain);

struct FeasibleInit {
  Mat K;
  double gamma;
  int tries;
};

// Rejection-samples K entrywise uniform on [-w, w] until stabilizing. With
// induce_gamma, returns gamma = (1+gamma_slack)*||T(K)||_inf; otherwise keeps
// sampling until membership holds at plant.gamma.
FeasibleInit find_feasible_init(const Plant& plant, TimeDomain domain, double box_half_width,
                                double gamma_slack, int max_tries, std::uint64_t seed,
                                bool induce_gamma);

}  // namespace h2hinf
