#include "h2hinf/cases.hpp"

namespace h2hinf::cases {

Plant case1(double gamma) {
  Mat A(3, 3), B(3, 3), ctc(3, 3), R(3, 3);
  A << 1, 0, -10, -1, 1, 0, 0, 0, 1;
  B << 1, -10, 0, 0, 1, 0, -1, 0, 1;
  ctc << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  R << 5, -3, 0, -3, 5, -2, 0, -2, 5;
  return make_plant(A, B, Mat::Identity(3, 3), ctc, R, gamma);
}

Plant case2() {
  Mat A(2, 2), B(2, 2), C(3, 2);
  A << 2, 0, 0, 0;
  B << 1, 0, 0, 0;
  C << 0, 0, 0, 0, 1, 2;
  return make_plant_from_output(A, B, B, C, Mat::Identity(2, 2), kCase2Gamma);
}

Plant case3(double gamma) {
  Mat A(3, 3), B(3, 3), C(4, 3);
  A << 1, 0, -10, -1, 1, 0, 0, 0, 1;
  B << 1, -10, 0, 0, 1, 0, -1, 0, 1;
  C << 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2;
  return make_plant_from_output(A, B, 0.5 * Mat::Identity(3, 3), C, Mat::Identity(3, 3), gamma);
}

Plant nonconvex_plant(double gamma) {
  const Mat I3 = Mat::Identity(3, 3);
  return make_plant(I3, I3, 0.1 * I3, I3, I3, gamma);
}

Mat nonconvex_discrete_K1() {
  Mat K(3, 3);
  K << 1, 0, -1, -1, 1, 0, 0, 0, 1;
  return K;
}

Mat nonconvex_discrete_K2() {
  Mat K(3, 3);
  K << 1, -2, 0, 0, 1, 0, -1, 0, 1;
  return K;
}

Mat nonconvex_continuous_K1() {
  Mat K(3, 3);
  K << 2, 0, -1, -1, 2, 0, 0, 0, 2;
  return K;
}

Mat nonconvex_continuous_K2() {
  Mat K(3, 3);
  K << 2, -2, 0, 0, 2, 0, -1, 0, 2;
  return K;
}

Plant nocoercivity_1d() {
  Mat A(1, 1), B(1, 1), D(1, 1), ctc(1, 1), R(1, 1);
  A << 2.75;
  B << 2.0;
  D << 0.1;  // D^2 = 0.01
  ctc << 1.0;
  R << 1.0;
  return make_plant(A, B, D, ctc, R, 0.2101);
}

}  // namespace h2hinf::cases
