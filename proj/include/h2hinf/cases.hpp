#pragma once

#include "h2hinf/plant.hpp"

namespace h2hinf::cases {

// Discrete 3-state benchmark; gamma is run-dependent (derived from the random
// initial gain), so it is a parameter here.
Plant case1(double gamma);

// Discrete 2-state instance with a continuum of stationary points; gamma = 10
// is part of the case definition.
Plant case2();
constexpr double kCase2Gamma = 10.0;

// Continuous 3-state instance used for the solver comparisons; gamma in
// {5, 3, 1} in the experiments.
Plant case3(double gamma);

// Nonconvexity counterexamples: A = B = I3, C'C = R = I3, D = 0.1*I3 in both
// time domains; the gains differ.
Plant nonconvex_plant(double gamma);
Mat nonconvex_discrete_K1();
Mat nonconvex_discrete_K2();
Mat nonconvex_continuous_K1();
Mat nonconvex_continuous_K2();

// Scalar no-coercivity instance A=2.75, B=2, C^2=1, R=1, D^2=0.01,
// gamma=0.2101; the boundary gain is 1.2573.
Plant nocoercivity_1d();
constexpr double kNocoercivityBoundaryGain = 1.2573;

}  // namespace h2hinf::cases
