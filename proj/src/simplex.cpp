#include "mqbound/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace mqbound {

namespace {

double max_pairwise_distance(const std::vector<Eigen::VectorXd>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, (pts[i] - pts[j]).norm());
    }
  }
  return best;
}

}  // namespace

Simplex::Simplex(std::vector<Eigen::VectorXd> vertices)
    : dim_(0), vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw std::invalid_argument("Simplex: need at least 2 vertices");
  }
  dim_ = static_cast<int>(vertices_.size()) - 1;
  for (const auto& v : vertices_) {
    if (v.size() != dim_) {
      throw std::invalid_argument("Simplex: expected " + std::to_string(dim_ + 1) +
                                  " vertices in R^" + std::to_string(dim_));
    }
  }

  // Affine independence: the edge matrix from vertex 0 must have a
  // determinant that is nonzero beyond a scale-relative tolerance.
  Eigen::MatrixXd edges(dim_, dim_);
  double scale = 1.0;
  for (int i = 0; i < dim_; ++i) {
    edges.col(i) = vertices_[i + 1] - vertices_[0];
    scale *= std::max(edges.col(i).norm(), std::numeric_limits<double>::min());
  }
  const double det = edges.partialPivLu().determinant();
  if (!(std::fabs(det) > 1e-12 * scale)) {
    throw std::invalid_argument("Simplex: vertices are affinely dependent (degenerate)");
  }

  diameter_ = max_pairwise_distance(vertices_);

  Eigen::MatrixXd bary(dim_ + 1, dim_ + 1);
  for (int j = 0; j <= dim_; ++j) {
    bary.col(j).head(dim_) = vertices_[j];
    bary(dim_, j) = 1.0;
  }
  bary_lu_ = bary.partialPivLu();
}

Simplex Simplex::unit_right(int n) {
  if (n < 1) throw std::invalid_argument("Simplex::unit_right: n must be >= 1");
  std::vector<Eigen::VectorXd> verts(n + 1, Eigen::VectorXd::Zero(n));
  for (int i = 0; i < n; ++i) verts[i + 1](i) = 1.0;
  return Simplex(std::move(verts));
}

Eigen::VectorXd Simplex::barycentric(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("Simplex::barycentric: point has wrong dimension");
  }
  Eigen::VectorXd rhs(dim_ + 1);
  rhs.head(dim_) = x;
  rhs(dim_) = 1.0;
  return bary_lu_.solve(rhs);
}

bool Simplex::contains(const Eigen::VectorXd& x, double tol) const {
  return (barycentric(x).array() >= -tol).all();
}

Eigen::VectorXd Simplex::centroid() const {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(dim_ + 1);
}

Simplex Simplex::scale_to_diameter(double target) const {
  if (!(target > 0.0)) {
    throw std::invalid_argument("Simplex::scale_to_diameter: target must be positive");
  }
  const double t = target / diameter_;
  std::vector<Eigen::VectorXd> verts;
  verts.reserve(vertices_.size());
  verts.push_back(vertices_[0]);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    verts.push_back(vertices_[0] + t * (vertices_[i] - vertices_[0]));
  }
  return Simplex(std::move(verts));
}

long simplex_lattice_count(int n, int degree) {
  if (n < 1 || degree < 0) {
    throw std::domain_error("simplex_lattice_count: need n >= 1, degree >= 0");
  }
  long count = 1;
  for (int i = 1; i <= n; ++i) {
    const long long next =
        static_cast<long long>(count) * (degree + i) / i;  // exact: C is integral
    if (next > std::numeric_limits<long>::max()) {
      throw std::overflow_error("simplex_lattice_count: count exceeds long range");
    }
    count = static_cast<long>(next);
  }
  return count;
}

LatticePoints equally_spaced_points(const Simplex& s, int degree) {
  if (degree < 1) {
    throw std::invalid_argument("equally_spaced_points: degree must be >= 1");
  }
  const int n = s.dim();
  LatticePoints out;
  out.degree = degree;
  const long count = simplex_lattice_count(n, degree);
  out.points.reserve(count);
  out.multi_indices.reserve(count);

  // Ascending lexicographic enumeration of (k_1, ..., k_{n+1}) with
  // sum = degree, from (0, ..., 0, degree) to (degree, 0, ..., 0).
  std::vector<int> k(n + 1, 0);
  k[n] = degree;
  while (true) {
    out.multi_indices.push_back(k);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
    for (int j = 0; j <= n; ++j) {
      if (k[j] != 0) {
        p += (static_cast<double>(k[j]) / degree) * s.vertices()[j];
      }
    }
    out.points.push_back(std::move(p));

    // Lex successor: rightmost slot j with weight strictly to its right
    // gains one unit; that right weight minus one moves to the tail.
    int j = -1;
    int right_weight = 0;
    for (int i = n; i >= 1; --i) {
      right_weight += k[i];
      if (right_weight > 0) {
        j = i - 1;
        break;
      }
    }
    if (j < 0) break;  // all weight in slot 0: last tuple emitted
    k[j] += 1;
    for (int t = j + 1; t <= n; ++t) k[t] = 0;
    k[n] = right_weight - 1;
  }

  return out;
}

}  // namespace mqbound
