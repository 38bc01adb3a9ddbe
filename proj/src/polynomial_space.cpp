#include "mqbound/polynomial_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "mqbound/errors.hpp"

namespace mqbound {

MonomialBasis::MonomialBasis(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1) throw std::invalid_argument("MonomialBasis: dim must be >= 1");
  if (degree < 0) throw std::invalid_argument("MonomialBasis: degree must be >= 0");

  // Exponent tuples of each total degree d, lexicographically descending so
  // that x1 precedes x2 within a degree block.  Generated in ascending lex
  // and reversed per block.
  for (int d = 0; d <= degree; ++d) {
    std::vector<std::vector<int>> block;
    std::vector<int> k(dim, 0);
    k[dim - 1] = d;
    while (true) {
      block.push_back(k);
      int j = -1;
      int right_weight = 0;
      for (int i = dim - 1; i >= 1; --i) {
        right_weight += k[i];
        if (right_weight > 0) {
          j = i - 1;
          break;
        }
      }
      if (j < 0) break;
      k[j] += 1;
      for (int t = j + 1; t < dim; ++t) k[t] = 0;
      k[dim - 1] = right_weight - 1;
    }
    std::reverse(block.begin(), block.end());
    for (auto& a : block) exponents_.push_back(std::move(a));
  }
}

Eigen::VectorXd MonomialBasis::evaluate(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("MonomialBasis::evaluate: point has wrong dimension");
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(exponents_.size()));
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    double v = 1.0;
    for (int d = 0; d < dim_; ++d) {
      for (int p = 0; p < exponents_[j][d]; ++p) v *= x(d);
    }
    out(static_cast<Eigen::Index>(j)) = v;
  }
  return out;
}

Eigen::MatrixXd vandermonde(const std::vector<Eigen::VectorXd>& points,
                            const MonomialBasis& basis) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(points.size()),
                      static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = basis.evaluate(points[i]).transpose();
  }
  return out;
}

bool is_determining(const std::vector<Eigen::VectorXd>& points, int dim, int degree,
                    double tol) {
  const MonomialBasis basis(dim, degree);
  if (points.size() < basis.size()) return false;
  const Eigen::MatrixXd v = vandermonde(points, basis);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  const Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
  const double largest = diag.maxCoeff();
  if (!(largest > 0.0)) return false;
  // Column-pivoted QR orders |R_ii| nonincreasing; the last entry is the
  // rank-revealing pivot for full column rank.
  return diag(diag.size() - 1) > tol * largest;
}

LagrangeBasis::LagrangeBasis(LatticePoints nodes)
    : nodes_(std::move(nodes)),
      basis_(nodes_.points.empty()
                 ? throw std::invalid_argument("LagrangeBasis: empty node set")
                 : static_cast<int>(nodes_.points.front().size()),
             nodes_.degree) {
  const std::size_t n_nodes = nodes_.points.size();
  if (n_nodes != basis_.size()) {
    throw std::invalid_argument("LagrangeBasis: node count " + std::to_string(n_nodes) +
                                " does not match dim P_l = " +
                                std::to_string(basis_.size()));
  }

  shift_ = Eigen::VectorXd::Zero(basis_.dim());
  for (const auto& p : nodes_.points) shift_ += p;
  shift_ /= static_cast<double>(n_nodes);
  double diam = 0.0;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t j = i + 1; j < n_nodes; ++j) {
      diam = std::max(diam, (nodes_.points[i] - nodes_.points[j]).norm());
    }
  }
  scale_ = diam > 0.0 ? diam : 1.0;

  std::vector<Eigen::VectorXd> local;
  local.reserve(n_nodes);
  for (const auto& p : nodes_.points) local.push_back((p - shift_) / scale_);
  const Eigen::MatrixXd v = vandermonde(local, basis_);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(v);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    throw ConditioningError("LagrangeBasis: Vandermonde system singular beyond tolerance",
                            0.0);
  }
  // l_i(y_j) = delta_ij  <=>  V * coeffs^T = I.
  coeffs_ = lu.solve(Eigen::MatrixXd::Identity(v.rows(), v.cols())).transpose();
}

Eigen::VectorXd LagrangeBasis::evaluate(const Eigen::VectorXd& x) const {
  return coeffs_ * basis_.evaluate((x - shift_) / scale_);
}

double lebesgue_estimate(const LagrangeBasis& basis, const Simplex& s,
                         int sample_degree) {
  if (sample_degree < 2 * basis.nodes().degree) {
    throw std::invalid_argument("lebesgue_estimate: sample_degree must be >= 2l");
  }
  const LatticePoints sample = equally_spaced_points(s, sample_degree);
  double best = 0.0;
  for (const auto& x : sample.points) {
    best = std::max(best, basis.evaluate(x).cwiseAbs().sum());
  }
  return best;
}

}  // namespace mqbound
