#pragma once

#include <Eigen/Dense>

#include "mqbound/polynomial_space.hpp"
#include "mqbound/simplex.hpp"

namespace mqbound {

// Signed weights z on the degree-l lattice Y of a simplex reproducing point
// evaluation at x on the degree-l polynomial space:
//   sum_j z_j p(y_j) = p(x)  for all p with deg p <= degree.
// The weights are the Lagrange cardinal values z_j = l_j(x), so the total
// variation sum |z_j| is bounded by the Lebesgue constant and hence by
// C(2l-1, l).
struct NormingMeasure {
  LatticePoints support;
  Eigen::VectorXd weights;
  Eigen::VectorXd target;
  int degree = 0;
};

// Throws std::domain_error when x lies outside the simplex (containment
// tolerance 1e-10 on barycentric coordinates).
NormingMeasure norming_weights(const Simplex& s, int degree, const Eigen::VectorXd& x);

// sum_j |z_j|
double total_variation(const NormingMeasure& m);

// sum_j |z_j| * |y_j - x|^power
double moment_against_distance(const NormingMeasure& m, const Eigen::VectorXd& x,
                               int power);

}  // namespace mqbound
