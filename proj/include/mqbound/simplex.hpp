#pragma once

#include <Eigen/Dense>
#include <vector>

namespace mqbound {

// An n-simplex in R^n given by its n+1 vertices.  Immutable after
// construction; construction rejects degenerate vertex sets.
class Simplex {
 public:
  explicit Simplex(std::vector<Eigen::VectorXd> vertices);

  // Vertices 0, e_1, ..., e_n.
  static Simplex unit_right(int n);

  int dim() const { return dim_; }
  const std::vector<Eigen::VectorXd>& vertices() const { return vertices_; }

  // Coordinates c with x = sum c_i v_i, sum c_i = 1.  Entries may be
  // negative when x lies outside the simplex.
  Eigen::VectorXd barycentric(const Eigen::VectorXd& x) const;

  // All barycentric coordinates >= -tol.  The slack keeps face and vertex
  // points from being rejected by rounding.
  bool contains(const Eigen::VectorXd& x, double tol = 1e-10) const;

  // Max pairwise vertex distance; equals the diameter of the hull.
  double diameter() const { return diameter_; }

  Eigen::VectorXd centroid() const;

  // Similar simplex, dilated about vertex 0, with the requested diameter.
  Simplex scale_to_diameter(double target) const;

 private:
  int dim_;
  std::vector<Eigen::VectorXd> vertices_;
  double diameter_;
  Eigen::PartialPivLU<Eigen::MatrixXd> bary_lu_;
};

// Equally spaced points of a given degree: barycentric coordinates
// (k_1/l, ..., k_{n+1}/l) with nonnegative integers k_i summing to l,
// enumerated in ascending lexicographic order of the multi-index.
struct LatticePoints {
  int degree = 0;
  std::vector<Eigen::VectorXd> points;
  std::vector<std::vector<int>> multi_indices;
};

LatticePoints equally_spaced_points(const Simplex& s, int degree);

// C(n+l, n), the lattice point count and dim of the degree-l polynomial
// space; throws if it does not fit in long.
long simplex_lattice_count(int n, int degree);

}  // namespace mqbound
