#pragma once

#include <Eigen/Dense>

#include "mqbound/signed_log.hpp"

namespace mqbound {

// Order of conditional positive definiteness: 0 for beta < 0, ceil(beta/2)
// for beta > 0.  Throws std::domain_error for beta in {0, 2, 4, ...}.
int cpd_order(double beta);

// The radial kernel  h(x) = Gamma(-beta/2) * (c^2 + |x|^2)^(beta/2),
// multiquadric for beta > 0 and inverse multiquadric for beta < 0.
// The Gamma prefactor is kept exactly (it is negative for beta in (0, 2));
// positivity of the induced quadratic form holds on coefficient vectors
// annihilating polynomials of degree < order().
class KernelParams {
 public:
  KernelParams(double beta, double c);

  double beta() const { return beta_; }
  double c() const { return c_; }
  int order() const { return order_; }

  // h at squared radius r2 = |x|^2.  Throws OverflowError if the value
  // exceeds double range.
  double evaluate_r2(double r2) const;

  double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return evaluate_r2((x - y).squaredNorm());
  }

 private:
  double beta_;
  double c_;
  double c2_;
  int order_;
  SignedLog gamma_prefactor_;  // Gamma(-beta/2)
};

}  // namespace mqbound
