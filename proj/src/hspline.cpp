#include "mqbound/hspline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "mqbound/errors.hpp"

namespace mqbound {

namespace {

double center_set_diameter(const std::vector<Eigen::VectorXd>& centers) {
  double diam = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      diam = std::max(diam, (centers[i] - centers[j]).norm());
    }
  }
  return diam;
}

Eigen::VectorXd center_set_centroid(const std::vector<Eigen::VectorXd>& centers) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(centers.front().size());
  for (const auto& p : centers) c += p;
  return c / static_cast<double>(centers.size());
}

void check_centers_distinct(const std::vector<Eigen::VectorXd>& centers, double diam) {
  const double floor_dist = 1e-12 * std::max(diam, 1e-300);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      if ((centers[i] - centers[j]).norm() <= floor_dist) {
        throw std::invalid_argument("fit: centers " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
      }
    }
  }
}

}  // namespace

HSpline::HSpline(KernelParams kernel, std::vector<Eigen::VectorXd> centers,
                 Eigen::VectorXd coefficients, std::optional<PolynomialTail> tail,
                 double seminorm, double condition_diagnostic)
    : kernel_(std::move(kernel)),
      centers_(std::move(centers)),
      coefficients_(std::move(coefficients)),
      tail_(std::move(tail)),
      seminorm_(seminorm),
      condition_diagnostic_(condition_diagnostic) {}

double HSpline::evaluate(const Eigen::VectorXd& x) const {
  double v = tail_ ? tail_->evaluate(x) : 0.0;
  for (std::size_t j = 0; j < centers_.size(); ++j) {
    v += coefficients_(static_cast<Eigen::Index>(j)) *
         kernel_.evaluate_r2((x - centers_[j]).squaredNorm());
  }
  return v;
}

Eigen::MatrixXd assemble_kernel_matrix(const KernelParams& kernel,
                                       const std::vector<Eigen::VectorXd>& centers) {
  const Eigen::Index n = static_cast<Eigen::Index>(centers.size());
  Eigen::MatrixXd h(n, n);
  const double diag = kernel.evaluate_r2(0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i, i) = diag;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = kernel.evaluate_r2((centers[i] - centers[j]).squaredNorm());
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

double kernel_seminorm(const KernelParams& kernel,
                       const std::vector<Eigen::VectorXd>& centers,
                       const Eigen::VectorXd& coefficients) {
  const Eigen::MatrixXd h = assemble_kernel_matrix(kernel, centers);
  const double quad = coefficients.dot(h * coefficients);
  const double scale =
      (coefficients.cwiseAbs() * coefficients.cwiseAbs().transpose())
          .cwiseProduct(h.cwiseAbs())
          .sum();
  if (quad < -1e-9 * std::max(scale, 1e-300)) {
    throw NumericError("kernel_seminorm: quadratic form is negative (" +
                       std::to_string(quad) + "); moment conditions violated");
  }
  return std::sqrt(std::max(quad, 0.0));
}

HSpline fit(const InterpolationProblem& prob) {
  const auto& centers = prob.centers;
  const Eigen::Index n_centers = static_cast<Eigen::Index>(centers.size());
  if (n_centers == 0) throw std::invalid_argument("fit: no centers");
  const int dim = static_cast<int>(centers.front().size());
  if (prob.values.size() != n_centers) {
    throw std::invalid_argument("fit: values/centers size mismatch");
  }
  const double diam = center_set_diameter(centers);
  check_centers_distinct(centers, diam);

  const int m = prob.kernel.order();
  std::optional<PolynomialTail> tail;
  Eigen::MatrixXd p(n_centers, 0);
  if (m >= 1) {
    if (!is_determining(centers, dim, m - 1)) {
      throw std::domain_error("fit: centers are not a determining set for degree " +
                              std::to_string(m - 1) + " polynomials");
    }
    PolynomialTail t{MonomialBasis(dim, m - 1), Eigen::VectorXd(),
                     center_set_centroid(centers), diam > 0.0 ? diam : 1.0};
    p.resize(n_centers, static_cast<Eigen::Index>(t.basis.size()));
    for (Eigen::Index i = 0; i < n_centers; ++i) {
      p.row(i) = t.basis.evaluate((centers[i] - t.shift) / t.scale).transpose();
    }
    tail = std::move(t);
  }

  const Eigen::Index n_poly = p.cols();
  const Eigen::Index n_total = n_centers + n_poly;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_total, n_total);
  a.topLeftCorner(n_centers, n_centers) = assemble_kernel_matrix(prob.kernel, centers);
  if (n_poly > 0) {
    a.topRightCorner(n_centers, n_poly) = p;
    a.bottomLeftCorner(n_poly, n_centers) = p.transpose();
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_total);
  rhs.head(n_centers) = prob.values;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pivot_max = pivots.maxCoeff();
  const double pivot_min = pivots.minCoeff();
  const double cond = pivot_min > 0.0 ? pivot_max / pivot_min
                                      : std::numeric_limits<double>::infinity();
  if (!(pivot_min >= 1e-13 * pivot_max)) {
    throw ConditioningError(
        "fit: saddle-point system numerically singular (pivot ratio " +
            std::to_string(pivot_min / pivot_max) + ")",
        cond);
  }
  const Eigen::VectorXd sol = lu.solve(rhs);
  Eigen::VectorXd coeffs = sol.head(n_centers);
  if (tail) tail->coeffs = sol.tail(n_poly);

  // Kernel coefficients whose whole contribution to s sits below working
  // precision relative to the data are numerical zeros (polynomial data of
  // degree < m); their quadratic form is roundoff of either sign.
  const double kernel_scale = std::fabs(prob.kernel.evaluate_r2(0.0));
  const double data_scale = std::max(1.0, prob.values.cwiseAbs().maxCoeff());
  double seminorm = 0.0;
  if (coeffs.cwiseAbs().maxCoeff() * kernel_scale * static_cast<double>(n_centers) >
      1e-12 * data_scale) {
    seminorm = kernel_seminorm(prob.kernel, centers, coeffs);
  }
  return HSpline(prob.kernel, centers, std::move(coeffs), std::move(tail), seminorm,
                 cond);
}

HSpline hspline_from_parts(const KernelParams& kernel,
                           std::vector<Eigen::VectorXd> centers,
                           Eigen::VectorXd coefficients,
                           std::optional<PolynomialTail> tail) {
  if (centers.empty()) throw std::invalid_argument("hspline_from_parts: no centers");
  if (coefficients.size() != static_cast<Eigen::Index>(centers.size())) {
    throw std::invalid_argument("hspline_from_parts: coefficient/center size mismatch");
  }
  const int dim = static_cast<int>(centers.front().size());
  const int m = kernel.order();
  if (m >= 1) {
    // Moment conditions: |sum_j c_j q(x_j)| small relative to ||c|| ||q||.
    const MonomialBasis basis(dim, m - 1);
    const Eigen::VectorXd shift = center_set_centroid(centers);
    const double diam = center_set_diameter(centers);
    const double scale = diam > 0.0 ? diam : 1.0;
    Eigen::MatrixXd p(static_cast<Eigen::Index>(centers.size()),
                      static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < centers.size(); ++i) {
      p.row(static_cast<Eigen::Index>(i)) =
          basis.evaluate((centers[i] - shift) / scale).transpose();
    }
    const Eigen::VectorXd resid = p.transpose() * coefficients;
    const double tol = 1e-9 * std::max(1.0, coefficients.norm()) *
                       std::max(1.0, p.colwise().norm().maxCoeff());
    if (resid.cwiseAbs().maxCoeff() > tol) {
      throw std::invalid_argument(
          "hspline_from_parts: coefficients violate the moment conditions");
    }
  }
  const double seminorm = kernel_seminorm(kernel, centers, coefficients);
  return HSpline(kernel, std::move(centers), std::move(coefficients), std::move(tail),
                 seminorm, std::numeric_limits<double>::quiet_NaN());
}

}  // namespace mqbound
