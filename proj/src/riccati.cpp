#include "h2hinf/riccati.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace h2hinf {

namespace {

constexpr double kMarginFloor = 1e-12;   // lambda_min(gw - D'PD) below this is infeasible
constexpr double kDivergenceCap = 1e12;  // ||P||_F beyond this is infeasible

// gw - D'PD with a positive-definiteness check; returns false on loss of
// definiteness instead of throwing so solver loops can classify the failure.
bool attenuation_gap(const Mat& P, const Mat& D, const Mat& gw, Mat& gap, double& lmin) {
  gap = symmetrize(gw - D.transpose() * P * D);
  lmin = min_eig_sym(gap);
  return lmin >= kMarginFloor;
}

}  // namespace

Mat tilde_p_weighted(const Mat& P, const Mat& D, const Mat& gw) {
  if (P.rows() != P.cols() || D.rows() != P.rows() || gw.rows() != D.cols() ||
      gw.cols() != D.cols()) {
    throw DimensionError("tilde_p: inconsistent dimensions");
  }
  Mat gap;
  double lmin;
  if (!attenuation_gap(P, D, gw, gap, lmin)) {
    throw InfeasibilityError("tilde_p: attenuation gap not positive definite");
  }
  const Mat DtP = D.transpose() * P;
  return symmetrize(P + DtP.transpose() * gap.ldlt().solve(DtP));
}

Mat tilde_p(const Mat& P, const Mat& D, double gamma) {
  return tilde_p_weighted(P, D, gamma * gamma * Mat::Identity(D.cols(), D.cols()));
}

PolicyRiccatiResult solve_policy_riccati_fixed_point(const Mat& Acl, const Mat& Qbar,
                                                     const Mat& D, const Mat& gw, double tol,
                                                     int max_iter, const Mat* P0) {
  const Eigen::Index m = Acl.rows();
  Mat P = P0 ? symmetrize(*P0) : Mat::Zero(m, m);
  Mat gap;
  double lmin;
  double diff = std::numeric_limits<double>::infinity();
  for (int t = 0; t < max_iter; ++t) {
    if (!attenuation_gap(P, D, gw, gap, lmin) || P.norm() > kDivergenceCap) {
      return {RiccatiOutcome::infeasible, P, diff, t};
    }
    const Mat DtP = D.transpose() * P;
    const Mat Ptilde = symmetrize(P + DtP.transpose() * gap.ldlt().solve(DtP));
    Mat Pnext = symmetrize(Qbar + Acl.transpose() * Ptilde * Acl);
    diff = (Pnext - P).norm();
    if (diff <= tol * (1.0 + Pnext.norm())) {
      return {RiccatiOutcome::converged, Pnext, diff, t + 1};
    }
    P = std::move(Pnext);
  }
  return {RiccatiOutcome::no_convergence, P, diff, max_iter};
}

namespace {

RiccatiCertificate discrete_certificate(const Plant& plant, const Mat& K,
                                        const PolicyRiccatiResult& r) {
  RiccatiCertificate cert;
  cert.P = r.P;
  cert.iterations = r.iterations;
  const Mat Acl = plant.A - plant.B * K;
  const double g2 = plant.gamma * plant.gamma;
  const Mat gw = g2 * Mat::Identity(plant.nw(), plant.nw());
  Mat gap;
  double lmin;
  attenuation_gap(r.P, plant.D, gw, gap, lmin);
  cert.brl_margin = lmin;
  cert.P_tilde = (lmin > 0.0) ? tilde_p(r.P, plant.D, plant.gamma) : r.P;
  cert.residual =
      (Acl.transpose() * cert.P_tilde * Acl + plant.output_weight(K) - r.P).norm();
  // BRL closed loop (I - g^-2 P DD')^-T (A - BK)
  const Mat M = Mat::Identity(plant.nx(), plant.nx()) -
                r.P * plant.D * plant.D.transpose() / g2;
  cert.closedloop_radius = spectral_radius(M.transpose().partialPivLu().solve(Acl));
  cert.feasible = lmin > 0.0 && cert.closedloop_radius < 1.0 &&
                  min_eig_sym(r.P) >= -1e-10 * (1.0 + r.P.norm());
  return cert;
}

}  // namespace

std::optional<RiccatiCertificate> try_dare_policy(const Plant& plant, const Mat& K, double tol,
                                                  int max_iter) {
  if (K.rows() != plant.nu() || K.cols() != plant.nx()) {
    throw DimensionError("solve_dare_policy: K must be d x m");
  }
  const Mat Acl = plant.A - plant.B * K;
  if (spectral_radius(Acl) >= 1.0) return std::nullopt;
  const Mat gw = plant.gamma * plant.gamma * Mat::Identity(plant.nw(), plant.nw());
  PolicyRiccatiResult r =
      solve_policy_riccati_fixed_point(Acl, plant.output_weight(K), plant.D, gw, tol, max_iter);
  RiccatiCertificate cert = discrete_certificate(plant, K, r);
  cert.feasible = cert.feasible && r.outcome == RiccatiOutcome::converged;
  if (r.outcome == RiccatiOutcome::no_convergence) {
    // Marginal instances stall near the boundary; report as not certified.
    cert.feasible = false;
  }
  return cert;
}

RiccatiCertificate solve_dare_policy(const Plant& plant, const Mat& K, double tol,
                                     int max_iter) {
  const Mat Acl = plant.A - plant.B * K;
  if (spectral_radius(Acl) >= 1.0) {
    throw InstabilityError("solve_dare_policy: rho(A-BK) >= 1");
  }
  const Mat gw = plant.gamma * plant.gamma * Mat::Identity(plant.nw(), plant.nw());
  PolicyRiccatiResult r =
      solve_policy_riccati_fixed_point(Acl, plant.output_weight(K), plant.D, gw, tol, max_iter);
  if (r.outcome == RiccatiOutcome::infeasible) {
    throw InfeasibilityError(
        "solve_dare_policy: recursion diverged, certifying ||T(K)||_inf >= gamma");
  }
  if (r.outcome == RiccatiOutcome::no_convergence) {
    throw ConvergenceError("solve_dare_policy: max_iter reached (instance may be marginal)");
  }
  return discrete_certificate(plant, K, r);
}

namespace {

RiccatiCertificate continuous_certificate(const Plant& plant, const Mat& K, const Mat& P,
                                          int iterations) {
  RiccatiCertificate cert;
  cert.P = P;
  cert.P_tilde = P;  // no inflation in the continuous formulation
  cert.iterations = iterations;
  const Mat Acl = plant.A - plant.B * K;
  const double g2 = plant.gamma * plant.gamma;
  const Mat DDt = plant.D * plant.D.transpose();
  cert.residual = (Acl.transpose() * P + P * Acl + plant.output_weight(K) +
                   P * DDt * P / g2)
                      .norm();
  const double loop_re = max_real_eig(Acl + DDt * P / g2);
  cert.closedloop_radius = loop_re;
  cert.brl_margin = -loop_re;  // Hurwitz margin of the BRL closed loop
  cert.feasible = loop_re < 0.0 && min_eig_sym(P) >= -1e-10 * (1.0 + P.norm());
  return cert;
}

enum class CareOutcome { converged, infeasible, no_convergence };

// Newton iteration for the continuous policy Riccati equation: with
// Abar = A - BK + g^-2 DD'P, solve
//   Abar' P+ + P+ Abar + C'C + K'RK - g^-2 P DD' P = 0
// and refresh until the equation residual meets tol. From P = 0 the iterates
// increase monotonically to the stabilizing solution when one exists; losing
// the Hurwitz property of Abar certifies infeasibility.
CareOutcome care_newton(const Plant& plant, const Mat& K, double tol, int max_iter, Mat& P,
                        int& iters) {
  const Mat Acl = plant.A - plant.B * K;
  const Mat Qbar = plant.output_weight(K);
  const Mat DDt = plant.D * plant.D.transpose();
  const double g2 = plant.gamma * plant.gamma;
  const Eigen::Index m = plant.nx();
  P = Mat::Zero(m, m);
  for (int t = 0; t < max_iter; ++t) {
    const Mat Abar = Acl + DDt * P / g2;
    if (max_real_eig(Abar) >= -1e-12) {
      iters = t;
      return CareOutcome::infeasible;
    }
    Mat Pnext;
    try {
      Pnext = solve_clyap(Abar, Qbar - P * DDt * P / g2);
    } catch (const InstabilityError&) {
      iters = t;
      return CareOutcome::infeasible;
    }
    if (Pnext.norm() > kDivergenceCap) {
      iters = t;
      return CareOutcome::infeasible;
    }
    const double res =
        (Acl.transpose() * Pnext + Pnext * Acl + Qbar + Pnext * DDt * Pnext / g2).norm();
    P = std::move(Pnext);
    if (res <= tol * (1.0 + Qbar.norm())) {
      iters = t + 1;
      return CareOutcome::converged;
    }
  }
  iters = max_iter;
  return CareOutcome::no_convergence;
}

}  // namespace

std::optional<RiccatiCertificate> try_care_policy(const Plant& plant, const Mat& K, double tol,
                                                  int max_iter) {
  if (K.rows() != plant.nu() || K.cols() != plant.nx()) {
    throw DimensionError("solve_care_policy: K must be d x m");
  }
  if (max_real_eig(plant.A - plant.B * K) >= 0.0) return std::nullopt;
  Mat P;
  int iters = 0;
  const CareOutcome out = care_newton(plant, K, tol, max_iter, P, iters);
  RiccatiCertificate cert = continuous_certificate(plant, K, P, iters);
  cert.feasible = cert.feasible && out == CareOutcome::converged;
  return cert;
}

RiccatiCertificate solve_care_policy(const Plant& plant, const Mat& K, double tol,
                                     int max_iter) {
  if (max_real_eig(plant.A - plant.B * K) >= 0.0) {
    throw InstabilityError("solve_care_policy: A-BK is not Hurwitz");
  }
  Mat P;
  int iters = 0;
  switch (care_newton(plant, K, tol, max_iter, P, iters)) {
    case CareOutcome::infeasible:
      throw InfeasibilityError(
          "solve_care_policy: iteration diverged, certifying ||T(K)||_inf >= gamma");
    case CareOutcome::no_convergence:
      throw ConvergenceError("solve_care_policy: max_iter reached");
    case CareOutcome::converged:
      break;
  }
  return continuous_certificate(plant, K, P, iters);
}

OptimalGain solve_optimal_modified_riccati_weighted(const Mat& A, const Mat& B, const Mat& D,
                                                    const Mat& Qbar, const Mat& R, const Mat& gw,
                                                    double tol, int max_iter, const Mat* P0) {
  const Eigen::Index m = A.rows();
  Mat P = P0 ? symmetrize(*P0) : Mat::Zero(m, m);
  Mat K = Mat::Zero(B.cols(), m);
  Mat gap;
  double lmin;
  for (int t = 0; t < max_iter; ++t) {
    if (!attenuation_gap(P, D, gw, gap, lmin) || P.norm() > kDivergenceCap) {
      throw InfeasibilityError(
          "solve_optimal_modified_riccati: recursion diverged (last margin " +
          std::to_string(lmin) + "); the attenuation level is unattainable");
    }
    const Mat DtP = D.transpose() * P;
    const Mat Ptilde = symmetrize(P + DtP.transpose() * gap.ldlt().solve(DtP));
    K = (R + B.transpose() * Ptilde * B).ldlt().solve(B.transpose() * Ptilde * A);
    const Mat Acl = A - B * K;
    Mat Pnext = symmetrize(Qbar + K.transpose() * R * K + Acl.transpose() * Ptilde * Acl);
    const double diff = (Pnext - P).norm();
    P = std::move(Pnext);
    if (diff <= tol * (1.0 + P.norm())) {
      return {P, K, t + 1};
    }
  }
  throw ConvergenceError("solve_optimal_modified_riccati: max_iter reached");
}

OptimalGain solve_optimal_modified_riccati(const Plant& plant, double tol, int max_iter) {
  const Mat gw = plant.gamma * plant.gamma * Mat::Identity(plant.nw(), plant.nw());
  OptimalGain sol = solve_optimal_modified_riccati_weighted(plant.A, plant.B, plant.D, plant.ctc,
                                                            plant.R, gw, tol, max_iter);
  // A posteriori checks: E_{K*} ~ 0 and the BRL flags at the fixed point.
  RiccatiCertificate cert = solve_dare_policy(plant, sol.K, tol, max_iter);
  if (!cert.feasible) {
    throw InfeasibilityError("solve_optimal_modified_riccati: fixed point fails the BRL checks");
  }
  return sol;
}

ScalarRiccatiRoots scalar_dare_roots(double A, double B, double C2, double R, double D2,
                                     double gamma, double K) {
  const double a = A - B * K;
  const double g2 = gamma * gamma;
  const double qbar = C2 + R * K * K;
  const double b = g2 - a * a * g2 + qbar * D2;
  ScalarRiccatiRoots r;
  r.discriminant = b * b - 4.0 * D2 * qbar * g2;
  r.vertex = b / (2.0 * D2);
  if (r.discriminant >= 0.0) {
    const double s = std::sqrt(r.discriminant);
    r.p_minus = (b - s) / (2.0 * D2);
    r.p_plus = (b + s) / (2.0 * D2);
  } else {
    r.p_minus = std::numeric_limits<double>::quiet_NaN();
    r.p_plus = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace h2hinf
