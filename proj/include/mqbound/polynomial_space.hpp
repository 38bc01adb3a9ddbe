#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mqbound/simplex.hpp"

namespace mqbound {

// Monomials x^alpha with |alpha| <= degree in graded lexicographic order
// (total degree ascending, then lexicographically by exponent tuple with
// the leading variable first: 1, x1, x2, x1^2, x1 x2, x2^2, ...).
class MonomialBasis {
 public:
  MonomialBasis(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  // Values of all basis monomials at x.
  Eigen::VectorXd evaluate(const Eigen::VectorXd& x) const;

 private:
  int dim_;
  int degree_;
  std::vector<std::vector<int>> exponents_;
};

// Entry (i, j) = monomial_j(points[i]).
Eigen::MatrixXd vandermonde(const std::vector<Eigen::VectorXd>& points,
                            const MonomialBasis& basis);

// True iff the points are a determining set for the degree-`degree`
// polynomial space in R^dim: the Vandermonde matrix has full column rank,
// judged by a rank-revealing QR with threshold tol * (largest pivot).
bool is_determining(const std::vector<Eigen::VectorXd>& points, int dim, int degree,
                    double tol = 1e-10);

// Lagrange cardinal functions l_i on lattice nodes, l_i(y_j) = delta_ij.
// The coefficient matrix expresses each cardinal function in monomials of
// the local frame (x - shift) / scale; the frame removes the conditioning
// penalty of raw monomials on small or offset simplices.
class LagrangeBasis {
 public:
  explicit LagrangeBasis(LatticePoints nodes);

  const LatticePoints& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.points.size(); }
  const MonomialBasis& basis() const { return basis_; }
  const Eigen::MatrixXd& coefficients() const { return coeffs_; }
  const Eigen::VectorXd& shift() const { return shift_; }
  double scale() const { return scale_; }

  // Values of all cardinal functions at x.
  Eigen::VectorXd evaluate(const Eigen::VectorXd& x) const;

 private:
  LatticePoints nodes_;
  MonomialBasis basis_;
  Eigen::MatrixXd coeffs_;  // N x N, row i = coefficients of l_i
  Eigen::VectorXd shift_;
  double scale_;
};

// Lower estimate of the Lebesgue constant max_x sum_i |l_i(x)|, taken over
// the degree-`sample_degree` lattice of s (sample_degree >= 2 * node degree).
double lebesgue_estimate(const LagrangeBasis& basis, const Simplex& s,
                         int sample_degree);

}  // namespace mqbound
