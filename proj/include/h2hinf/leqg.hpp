#pragma once

#include "h2hinf/plant.hpp"

namespace h2hinf {

// Risk-sensitive LQ problem: x' = Ax + Bu + w, w ~ N(0, W), stage cost
// x'Qx + u'Ru, exponential-of-quadratic objective with risk parameter
// beta > 0 (risk-averse).
struct LeqgProblem {
  Mat A, B;
  Mat Q;  // > 0
  Mat R;  // > 0
  Mat W;  // > 0
  double beta = 0.0;
};

// Reduction to mixed design: gamma = beta^{-1/2}, D = W^{1/2}, C'C = Q.
Plant leqg_to_mixed(const LeqgProblem& p);

// J(K) = -beta^{-1} logdet(I - beta P_K W) with P_K the mapped-plant Riccati
// solution. Throws InfeasibilityError when the mapped membership fails.
double leqg_cost(const LeqgProblem& p, const Mat& K);

struct LeqgSolution {
  Mat K;
  double cost;
};

// Optimal LEQG controller via the modified Riccati recursion on the mapped
// plant.
LeqgSolution leqg_optimal(const LeqgProblem& p);

}  // namespace h2hinf
