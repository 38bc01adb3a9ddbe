#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "mqbound/kernel.hpp"
#include "mqbound/polynomial_space.hpp"

namespace mqbound {

struct InterpolationProblem {
  KernelParams kernel;
  std::vector<Eigen::VectorXd> centers;
  Eigen::VectorXd values;
};

// Polynomial part of an h-spline: degree <= m-1 monomials in the local
// frame (x - shift) / scale anchored at the centroid of the centers.
struct PolynomialTail {
  MonomialBasis basis;
  Eigen::VectorXd coeffs;
  Eigen::VectorXd shift;
  double scale = 1.0;

  double evaluate(const Eigen::VectorXd& x) const {
    return coeffs.dot(basis.evaluate((x - shift) / scale));
  }
};

// Fitted interpolant s(x) = p(x) + sum_j c_j h(x - x_j) whose kernel
// coefficients satisfy the moment conditions sum_j c_j q(x_j) = 0 for all
// q of degree < m.
class HSpline {
 public:
  HSpline(KernelParams kernel, std::vector<Eigen::VectorXd> centers,
          Eigen::VectorXd coefficients, std::optional<PolynomialTail> tail,
          double seminorm, double condition_diagnostic);

  double evaluate(const Eigen::VectorXd& x) const;

  // sqrt(c^T H c), the native-space semi-norm of an h-spline.
  double native_seminorm() const { return seminorm_; }

  const KernelParams& kernel() const { return kernel_; }
  const std::vector<Eigen::VectorXd>& centers() const { return centers_; }
  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  const std::optional<PolynomialTail>& tail() const { return tail_; }

  // max|pivot| / min|pivot| of the fit factorization; quiet NaN for splines
  // assembled from explicit parts.
  double condition_diagnostic() const { return condition_diagnostic_; }

 private:
  KernelParams kernel_;
  std::vector<Eigen::VectorXd> centers_;
  Eigen::VectorXd coefficients_;
  std::optional<PolynomialTail> tail_;
  double seminorm_;
  double condition_diagnostic_;
};

// H_ij = h(x_i - x_j), assembled from one squared radius per unordered pair
// so the result is symmetric exactly.
Eigen::MatrixXd assemble_kernel_matrix(const KernelParams& kernel,
                                       const std::vector<Eigen::VectorXd>& centers);

// sqrt of the kernel quadratic form c^T H c.  Tiny negative radicands
// (above -1e-9 * sum |c_i c_j H_ij|) clamp to zero; anything lower throws
// NumericError, signalling broken moment conditions.
double kernel_seminorm(const KernelParams& kernel,
                       const std::vector<Eigen::VectorXd>& centers,
                       const Eigen::VectorXd& coefficients);

// Solves the saddle-point system
//   [H  P; P^T  0] [c; a] = [f; 0]
// with P the degree-(m-1) Vandermonde of the centers in the local frame.
// Throws std::invalid_argument for coincident centers, std::domain_error
// for centers not determining P_{m-1}, and ConditioningError when
// min|pivot| < 1e-13 * max|pivot|.
HSpline fit(const InterpolationProblem& prob);

// Assembles an h-spline from explicit parts, verifying the moment
// conditions; used for analytically known targets.
HSpline hspline_from_parts(const KernelParams& kernel,
                           std::vector<Eigen::VectorXd> centers,
                           Eigen::VectorXd coefficients,
                           std::optional<PolynomialTail> tail);

}  // namespace mqbound
