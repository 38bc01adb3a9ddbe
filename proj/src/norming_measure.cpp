#include "mqbound/norming_measure.hpp"

#include <cmath>
#include <stdexcept>

namespace mqbound {

NormingMeasure norming_weights(const Simplex& s, int degree, const Eigen::VectorXd& x) {
  if (!s.contains(x)) {
    throw std::domain_error("norming_weights: target point lies outside the simplex");
  }
  LagrangeBasis lagrange(equally_spaced_points(s, degree));
  NormingMeasure m;
  m.support = lagrange.nodes();
  m.weights = lagrange.evaluate(x);
  m.target = x;
  m.degree = degree;
  return m;
}

double total_variation(const NormingMeasure& m) {
  return m.weights.cwiseAbs().sum();
}

double moment_against_distance(const NormingMeasure& m, const Eigen::VectorXd& x,
                               int power) {
  if (power < 0) throw std::domain_error("moment_against_distance: power must be >= 0");
  double acc = 0.0;
  for (std::size_t j = 0; j < m.support.points.size(); ++j) {
    const double d = (m.support.points[j] - x).norm();
    acc += std::fabs(m.weights(static_cast<Eigen::Index>(j))) * std::pow(d, power);
  }
  return acc;
}

}  // namespace mqbound
