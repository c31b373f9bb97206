#pragma once

#include <optional>

#include "h2hinf/plant.hpp"

namespace h2hinf {

// P_tilde = P + P D (gw - D'PD)^{-1} D' P, the attenuation-inflated value
// matrix. gw is the attenuation weight: gamma^2*I for mixed design, R^v for
// the game best response. Requires gw - D'PD > 0.
Mat tilde_p_weighted(const Mat& P, const Mat& D, const Mat& gw);
Mat tilde_p(const Mat& P, const Mat& D, double gamma);

enum class RiccatiOutcome { converged, infeasible, no_convergence };

struct PolicyRiccatiResult {
  RiccatiOutcome outcome;
  Mat P;            // last iterate (the solution when converged)
  double residual;  // Frobenius norm of the Riccati residual at P
  int iterations;
};

// Fixed-point recursion P <- Qbar + Acl' Ptilde(P) Acl from P0 (default 0),
// stopping when ||P_{t+1}-P_t||_F <= tol*(1+||P_t||_F). Declares infeasible
// when lambda_min(gw - D'PD) < 1e-12 or ||P||_F > 1e12. Acl must be Schur.
PolicyRiccatiResult solve_policy_riccati_fixed_point(const Mat& Acl, const Mat& Qbar,
                                                     const Mat& D, const Mat& gw, double tol,
                                                     int max_iter,
                                                     const Mat* P0 = nullptr);

struct RiccatiCertificate {
  Mat P;        // stabilizing solution, symmetric PSD
  Mat P_tilde;
  double residual;
  double brl_margin;         // disc: lambda_min(gamma^2 I - D'PD); cont: Hurwitz margin of the BRL loop
  double closedloop_radius;  // disc: rho((I - g^-2 P DD')^-T (A-BK)); cont: max Re eig(A-BK+g^-2 DD'P)
  bool feasible;             // all Bounded Real Lemma side conditions hold
  int iterations;
};

// Policy evaluation for the discrete mixed design Riccati equation
//   (A-BK)' Ptilde (A-BK) + C'C + K'RK - P = 0
// via the fixed-point recursion from P0 = 0. Throws InstabilityError when
// rho(A-BK) >= 1, InfeasibilityError when the iteration certifies
// ||T(K)||_inf >= gamma, ConvergenceError on exhausted budget.
RiccatiCertificate solve_dare_policy(const Plant& plant, const Mat& K, double tol = 1e-10,
                                     int max_iter = 100000);

// Same contract for the continuous equation
//   (A-BK)'P + P(A-BK) + C'C + K'RK + g^-2 P DD' P = 0,
// solved by Newton iteration with the closed loop refreshed each step.
RiccatiCertificate solve_care_policy(const Plant& plant, const Mat& K, double tol = 1e-10,
                                     int max_iter = 200);

// Non-throwing variants used where feasibility is queried in a loop
// (Hinf bisection, membership). nullopt encodes unstable K.
std::optional<RiccatiCertificate> try_dare_policy(const Plant& plant, const Mat& K, double tol,
                                                  int max_iter);
std::optional<RiccatiCertificate> try_care_policy(const Plant& plant, const Mat& K, double tol,
                                                  int max_iter);

struct OptimalGain {
  Mat P;  // fixed point of the modified Riccati recursion
  Mat K;
  int iterations;
};

// Optimal gain via the modified Riccati recursion
//   Ptilde^t = tilde_p(P^t), K^{t+1} = (R+B'Ptilde B)^{-1} B'Ptilde A,
//   P^{t+1}  = C'C + K'RK + (A-BK)'Ptilde(A-BK)
// from P^0 = 0, with a general attenuation weight so the zero-sum game GARE
// reuses it (gw = R^v). Throws InfeasibilityError when gamma is unattainable.
OptimalGain solve_optimal_modified_riccati_weighted(const Mat& A, const Mat& B, const Mat& D,
                                                    const Mat& Qbar, const Mat& R, const Mat& gw,
                                                    double tol, int max_iter,
                                                    const Mat* P0 = nullptr);
OptimalGain solve_optimal_modified_riccati(const Plant& plant, double tol = 1e-10,
                                           int max_iter = 100000);

// Roots of the scalar policy Riccati equation
//   D2 P^2 - [g^2 - a^2 g^2 + (C2 + R K^2) D2] P + (C2 + R K^2) g^2 = 0
// with a = A - B K. The stabilizing solution is the smaller root; at the
// feasibility boundary the discriminant vanishes and both roots collapse
// onto the vertex.
struct ScalarRiccatiRoots {
  double discriminant;
  double vertex;    // b / (2 D2), the double root when discriminant = 0
  double p_minus;   // smaller root (NaN when discriminant < 0)
  double p_plus;
};
ScalarRiccatiRoots scalar_dare_roots(double A, double B, double C2, double R, double D2,
                                     double gamma, double K);

}  // namespace h2hinf
