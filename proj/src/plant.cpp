#include "h2hinf/plant.hpp"

namespace h2hinf {

Plant make_plant(Mat A, Mat B, Mat D, Mat ctc, Mat R, double gamma) {
  const Eigen::Index m = A.rows();
  if (A.cols() != m || m == 0) throw DimensionError("make_plant: A must be square");
  if (B.rows() != m || B.cols() == 0) throw DimensionError("make_plant: B must be m x d");
  if (D.rows() != m || D.cols() == 0) throw DimensionError("make_plant: D must be m x n");
  if (ctc.rows() != m || ctc.cols() != m) throw DimensionError("make_plant: C'C must be m x m");
  if (R.rows() != B.cols() || R.cols() != B.cols()) {
    throw DimensionError("make_plant: R must be d x d");
  }
  if (!is_symmetric(ctc)) throw DimensionError("make_plant: C'C must be symmetric");
  if (!is_symmetric(R)) throw DimensionError("make_plant: R must be symmetric");
  if (min_eig_sym(ctc) < -1e-10 * (1.0 + ctc.norm())) {
    throw DimensionError("make_plant: C'C must be positive semidefinite");
  }
  if (min_eig_sym(R) <= 0.0) throw DimensionError("make_plant: R must be positive definite");
  if (!(gamma > 0.0)) throw DimensionError("make_plant: gamma must be positive");
  Plant p;
  p.A = std::move(A);
  p.B = std::move(B);
  p.D = std::move(D);
  p.ctc = symmetrize(ctc);
  p.R = symmetrize(R);
  p.gamma = gamma;
  return p;
}

Plant make_plant_from_output(Mat A, Mat B, Mat D, const Mat& C, Mat R, double gamma) {
  if (C.cols() != A.rows()) throw DimensionError("make_plant_from_output: C must be l x m");
  return make_plant(std::move(A), std::move(B), std::move(D), C.transpose() * C, std::move(R),
                    gamma);
}

}  // namespace h2hinf
