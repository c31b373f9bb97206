#include "h2hinf/norms.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <vector>

namespace h2hinf {

namespace {

using CMat = Eigen::MatrixXcd;

// sigma_max(T(K)) at one frequency point z (on the unit circle or imaginary
// axis): sqrt(lambda_max(G^H W G)) with G = (zI - Acl)^{-1} D and
// W = C'C + K'RK, so the matrix square root of W is never formed.
double sigma_at(const std::complex<double>& z, const Mat& Acl, const Mat& D, const Mat& W) {
  const Eigen::Index m = Acl.rows();
  CMat M = -Acl.cast<std::complex<double>>();
  M.diagonal().array() += z;
  const CMat G = M.partialPivLu().solve(D.cast<std::complex<double>>());
  CMat H = G.adjoint() * W.cast<std::complex<double>>() * G;
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (H + H.adjoint()), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

void require_stabilizing(const Plant& plant, const Mat& K, TimeDomain domain, const char* who) {
  const Mat Acl = plant.A - plant.B * K;
  const bool ok = domain == TimeDomain::discrete ? spectral_radius(Acl) < 1.0
                                                 : max_real_eig(Acl) < 0.0;
  if (!ok) throw InstabilityError(std::string(who) + ": K is not stabilizing");
}

}  // namespace

HinfResult hinf_grid(const Plant& plant, const Mat& K, TimeDomain domain, int n_points) {
  require_stabilizing(plant, K, domain, "hinf_grid");
  if (n_points < 1) throw DimensionError("hinf_grid: n_points must be >= 1");
  const Mat Acl = plant.A - plant.B * K;
  const Mat W = plant.output_weight(K);
  HinfResult result;
  result.method = HinfMethod::frequency_grid;
  result.iterations = 0;

  double best = 0.0, best_freq = 0.0;
  if (domain == TimeDomain::discrete) {
    for (int k = 0; k < n_points; ++k) {
      const double theta = 2.0 * M_PI * k / n_points;
      const double v = sigma_at(std::polar(1.0, theta), Acl, plant.D, W);
      ++result.iterations;
      if (v > best) { best = v; best_freq = theta; }
    }
  } else {
    auto sweep = [&](const std::vector<double>& omegas) {
      for (double w : omegas) {
        const double v = sigma_at(std::complex<double>(0.0, w), Acl, plant.D, W);
        ++result.iterations;
        if (v > best) { best = v; best_freq = w; }
      }
    };
    std::vector<double> omegas;
    omegas.push_back(0.0);
    for (int k = 0; k < n_points; ++k) {
      omegas.push_back(std::pow(10.0, -4.0 + 8.0 * k / std::max(n_points - 1, 1)));
    }
    sweep(omegas);
    // One refinement pass a decade either side of the current argmax.
    const double center = best_freq > 0.0 ? best_freq : 1e-4;
    omegas.clear();
    for (int k = 0; k < n_points; ++k) {
      omegas.push_back(center * std::pow(10.0, -1.0 + 2.0 * k / std::max(n_points - 1, 1)));
    }
    sweep(omegas);
  }
  result.value = best;
  result.witness_freq = best_freq;
  return result;
}

namespace {

// Feasibility of a trial attenuation level: the policy Riccati solve either
// certifies ||T(K)||_inf < g or fails. A stalled (non-convergent) solve at a
// near-boundary level counts as not certified.
bool level_feasible(const Plant& plant, const Mat& K, TimeDomain domain, double g) {
  const Plant trial = plant.with_gamma(g);
  const std::optional<RiccatiCertificate> cert =
      domain == TimeDomain::discrete ? try_dare_policy(trial, K, 1e-10, 20000)
                                     : try_care_policy(trial, K, 1e-10, 200);
  return cert && cert->feasible;
}

}  // namespace

HinfResult hinf_bisect(const Plant& plant, const Mat& K, TimeDomain domain, double tol) {
  require_stabilizing(plant, K, domain, "hinf_bisect");
  HinfResult result;
  result.method = HinfMethod::bisection;

  const int coarse = domain == TimeDomain::discrete ? 512 : 256;
  const double grid_lb = hinf_grid(plant, K, domain, coarse).value;
  double hi = std::max(2.0 * grid_lb, 64.0 * tol);
  int iters = 0;
  while (!level_feasible(plant, K, domain, hi)) {
    hi *= 2.0;
    ++iters;
    if (hi > 1e9) throw NumericalError("hinf_bisect: upper bracket exceeded 1e9");
  }
  double lo = grid_lb * (1.0 - 1e-9);
  while (hi - lo > tol) {
    const double mid = 0.5 * (hi + lo);
    if (level_feasible(plant, K, domain, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iters;
  }
  result.value = 0.5 * (hi + lo);
  result.iterations = iters;
  return result;
}

double h2_norm(const Plant& plant, const Mat& K, TimeDomain domain) {
  require_stabilizing(plant, K, domain, "h2_norm");
  const Mat Acl = plant.A - plant.B * K;
  const Mat W = plant.output_weight(K);
  const Mat X = domain == TimeDomain::discrete ? solve_dlyap(Acl, W) : solve_clyap(Acl, W);
  const double t = (plant.D.transpose() * X * plant.D).trace();
  return std::sqrt(std::max(t, 0.0));
}

MembershipCertificate membership(const Plant& plant, const Mat& K, TimeDomain domain) {
  MembershipCertificate cert;
  const std::optional<RiccatiCertificate> rc =
      domain == TimeDomain::discrete ? try_dare_policy(plant, K, 1e-10, 100000)
                                     : try_care_policy(plant, K, 1e-10, 200);
  if (!rc) {
    cert.stabilizing = false;
    cert.reason = MembershipReason::unstable;
    return cert;
  }
  cert.stabilizing = true;
  cert.riccati = rc;
  cert.in_set = rc->feasible;
  cert.reason = rc->feasible ? MembershipReason::ok : MembershipReason::hinf_violation;
  return cert;
}

}  // namespace h2hinf
