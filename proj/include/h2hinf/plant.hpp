#pragma once

#include "h2hinf/matlin.hpp"

namespace h2hinf {

enum class TimeDomain { discrete, continuous };

// Mixed H2/Hinf design instance: dynamics (A, B, D), output weight C'C,
// control weight R = E'E, and attenuation level gamma. The structural
// assumption E'[C E] = [0 R] is baked in by storing the products C'C and R
// instead of C and E; cross weights cannot be expressed.
struct Plant {
  Mat A;       // m x m
  Mat B;       // m x d
  Mat D;       // m x n, disturbance input
  Mat ctc;     // m x m, symmetric PSD
  Mat R;       // d x d, symmetric PD
  double gamma = 0.0;

  int nx() const { return static_cast<int>(A.rows()); }
  int nu() const { return static_cast<int>(B.cols()); }
  int nw() const { return static_cast<int>(D.cols()); }

  // Closed-loop output weight C'C + K'RK for gain K.
  Mat output_weight(const Mat& K) const { return ctc + K.transpose() * R * K; }

  Plant with_gamma(double g) const {
    Plant p = *this;
    p.gamma = g;
    return p;
  }
};

// Builds a plant from (A, B, D, C'C, R, gamma) and validates dimensions,
// symmetry of the weights, and gamma > 0.
Plant make_plant(Mat A, Mat B, Mat D, Mat ctc, Mat R, double gamma);

// Same, but from an explicit output map C (l x m); forms C'C.
Plant make_plant_from_output(Mat A, Mat B, Mat D, const Mat& C, Mat R, double gamma);

}  // namespace h2hinf
