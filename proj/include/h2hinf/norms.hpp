#pragma once

#include <optional>

#include "h2hinf/riccati.hpp"

namespace h2hinf {

enum class HinfMethod { bisection, frequency_grid };

struct HinfResult {
  double value = 0.0;
  HinfMethod method = HinfMethod::frequency_grid;
  std::optional<double> witness_freq;  // grid method: argmax theta / omega
  int iterations = 0;
};

// Largest singular value of T(K) over a frequency grid: theta uniform on
// [0, 2pi) for discrete time; omega = 0 plus log-spaced [1e-4, 1e4] with one
// refinement pass around the argmax for continuous time. A lower bound on
// the true norm. K must be stabilizing.
HinfResult hinf_grid(const Plant& plant, const Mat& K, TimeDomain domain, int n_points = 4096);

// ||T(K)||_inf by bisection on gamma through the Bounded Real Lemma: a trial
// gamma is feasible iff the policy Riccati solve certifies it. Bracket starts
// at a coarse grid lower bound and doubles upward until feasible.
HinfResult hinf_bisect(const Plant& plant, const Mat& K, TimeDomain domain, double tol = 1e-6);

// sqrt(tr(D'XD)) with X the closed-loop observability Gramian under output
// weight C'C + K'RK.
double h2_norm(const Plant& plant, const Mat& K, TimeDomain domain);

enum class MembershipReason { ok, unstable, hinf_violation };

struct MembershipCertificate {
  bool in_set = false;      // K in the feasible set cK
  bool stabilizing = false;
  std::optional<RiccatiCertificate> riccati;
  MembershipReason reason = MembershipReason::ok;
};

// Feasible-set membership: stabilizing and the policy Riccati solve certifies
// the Bounded Real Lemma side conditions. Never throws; failures are encoded
// in reason.
MembershipCertificate membership(const Plant& plant, const Mat& K, TimeDomain domain);

}  // namespace h2hinf
