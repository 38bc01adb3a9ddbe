#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mqbound/bounds.hpp"
#include "mqbound/hspline.hpp"
#include "mqbound/simplex.hpp"

namespace mqbound {

// Target specifications for convergence studies.  Kernel-translate targets
// are h-splines, so their native semi-norm (and hence the certified bound)
// is computable; the other targets get an empty bound column.
struct KernelTranslateTarget {
  std::vector<Eigen::VectorXd> centers;
  Eigen::VectorXd coefficients;            // must satisfy the moment conditions
  std::optional<PolynomialTail> tail;
};

struct PolynomialTarget {
  int degree = 0;
  Eigen::VectorXd coefficients;  // over MonomialBasis(n, degree), ambient coords
};

struct AnalyticTarget {
  std::string name;  // one of: runge, exp_sum, gaussian
};

// Placeholder resolved at run time into a KernelTranslateTarget with
// translates at perturbed degree-3 lattice points of the experiment simplex
// (perturbation 0.3 x spacing, deterministic seed).
struct DefaultTranslateTarget {};

using TargetSpec = std::variant<KernelTranslateTarget, PolynomialTarget,
                                AnalyticTarget, DefaultTranslateTarget>;

struct ExperimentConfig {
  int n = 2;
  double beta = 1.0;
  double c = 1.0;
  double b0 = 1.0;
  // Shape of the experiment domain; scaled internally.  Defaults to the
  // unit right simplex.
  std::optional<std::vector<Eigen::VectorXd>> simplex_vertices;
  TargetSpec target = DefaultTranslateTarget{};
  int l_min = 1;
  int l_max = 6;
  int eval_lattice_degree = 0;  // 0: 64 (n=1), 40 (n=2), 16 (n=3), 8 beyond,
                                // always raised to >= 2 * l_max
  enum class Format { Csv, Json } format = Format::Csv;
  unsigned long long seed = 12345;  // default-target perturbation seed
};

struct ExperimentRow {
  int l = 0;
  double delta = 0;        // 1/(3 l C): the degree-l slot of the admissible window
  long num_centers = 0;
  std::optional<double> max_error;
  std::optional<double> seminorm;
  std::optional<double> ln_bound;
  std::optional<double> condition_diag;
  std::optional<std::string> error;  // set when the row's solve failed
};

// Fits h-splines on the degree-l lattices of a fixed simplex for
// l = l_min..l_max, measures sup error on a dense lattice, and attaches the
// certified bound where the target is an h-spline.  Solver failures mark
// the row and the run continues.
std::vector<ExperimentRow> run_convergence(const ExperimentConfig& cfg);

// max |s(x) - target(x)| over the degree-`lattice_degree` lattice of the domain.
double sup_error(const HSpline& s,
                 const std::function<double(const Eigen::VectorXd&)>& target,
                 const Simplex& domain, int lattice_degree);

// Exact column schema: l,delta,num_centers,max_error,seminorm,ln_bound,
// condition_diag.  Missing fields are empty in CSV and null in JSON.
std::string emit_csv(const std::vector<ExperimentRow>& rows);
std::string emit_json(const std::vector<ExperimentRow>& rows);

// The simplex actually used by run_convergence for this config: the
// configured shape (or unit right simplex) scaled to diameter min(b0, c).
Simplex experiment_simplex(const ExperimentConfig& cfg);

// Resolves DefaultTranslateTarget for a given domain and kernel.
KernelTranslateTarget make_default_translate_target(const Simplex& domain,
                                                    const KernelParams& kernel,
                                                    unsigned long long seed);

}  // namespace mqbound
