#include "mqbound/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <utility>

#include "mqbound/errors.hpp"

namespace mqbound {

namespace {

// Deterministic uniform in [-1, 1); drawn from raw mt19937_64 output so the
// stream does not depend on the standard library's distribution internals.
class UniformStream {
 public:
  explicit UniformStream(unsigned long long seed) : rng_(seed) {}
  double next() { return 2.0 * ((rng_() >> 11) * 0x1.0p-53) - 1.0; }

 private:
  std::mt19937_64 rng_;
};

int default_eval_degree(int n) {
  switch (n) {
    case 1: return 64;
    case 2: return 40;
    case 3: return 16;
    default: return 8;
  }
}

std::function<double(const Eigen::VectorXd&)> analytic_function(const std::string& name) {
  if (name == "runge") {
    return [](const Eigen::VectorXd& x) { return 1.0 / (1.0 + 25.0 * x.squaredNorm()); };
  }
  if (name == "exp_sum") {
    return [](const Eigen::VectorXd& x) { return std::exp(x.sum()); };
  }
  if (name == "gaussian") {
    return [](const Eigen::VectorXd& x) { return std::exp(-x.squaredNorm()); };
  }
  throw std::invalid_argument("unknown analytic target '" + name + "'");
}

void append_field(std::string& out, const std::optional<double>& v) {
  out.push_back(',');
  if (v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    out += buf;
  }
}

void append_json_field(std::string& out, const char* key, const std::optional<double>& v) {
  out += ",\"";
  out += key;
  out += "\":";
  if (v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    out += buf;
  } else {
    out += "null";
  }
}

}  // namespace

Simplex experiment_simplex(const ExperimentConfig& cfg) {
  Simplex shape = cfg.simplex_vertices ? Simplex(*cfg.simplex_vertices)
                                       : Simplex::unit_right(cfg.n);
  if (shape.dim() != cfg.n) {
    throw std::invalid_argument("experiment_simplex: simplex dimension != n");
  }
  // Fixed domain for every row; the centers refine inside it.  Capped at
  // the kernel scale c: much larger and translate targets lose smoothness
  // relative to the lattice, much smaller and the kernel matrix flattens
  // toward rank deficiency.
  return shape.scale_to_diameter(std::min(cfg.b0, cfg.c));
}

KernelTranslateTarget make_default_translate_target(const Simplex& domain,
                                                    const KernelParams& kernel,
                                                    unsigned long long seed) {
  const LatticePoints anchors = equally_spaced_points(domain, 3);
  const double spacing = domain.diameter() / 3.0;
  UniformStream stream(seed);

  KernelTranslateTarget target;
  target.centers.reserve(anchors.points.size());
  for (const auto& p : anchors.points) {
    Eigen::VectorXd q = p;
    for (Eigen::Index d = 0; d < q.size(); ++d) {
      q(d) += 0.3 * spacing * stream.next();
    }
    target.centers.push_back(std::move(q));
  }

  Eigen::VectorXd raw(static_cast<Eigen::Index>(target.centers.size()));
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw(i) = stream.next();

  const int m = kernel.order();
  if (m >= 1) {
    // Project onto the moment-condition subspace: coefficients orthogonal
    // to every polynomial of degree < m sampled at the centers.
    const MonomialBasis basis(domain.dim(), m - 1);
    Eigen::MatrixXd p(raw.size(), static_cast<Eigen::Index>(basis.size()));
    const Eigen::VectorXd shift = domain.centroid();
    const double scale = domain.diameter();
    for (std::size_t i = 0; i < target.centers.size(); ++i) {
      p.row(static_cast<Eigen::Index>(i)) =
          basis.evaluate((target.centers[i] - shift) / scale).transpose();
    }
    const Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(p).householderQ() *
        Eigen::MatrixXd::Identity(p.rows(), p.cols());
    target.coefficients = raw - q * (q.transpose() * raw);
  } else {
    target.coefficients = raw;
  }
  return target;
}

double sup_error(const HSpline& s,
                 const std::function<double(const Eigen::VectorXd&)>& target,
                 const Simplex& domain, int lattice_degree) {
  if (lattice_degree < 1) {
    throw std::invalid_argument("sup_error: lattice_degree must be >= 1");
  }
  const LatticePoints sample = equally_spaced_points(domain, lattice_degree);
  double worst = 0.0;
  for (const auto& x : sample.points) {
    worst = std::max(worst, std::fabs(s.evaluate(x) - target(x)));
  }
  return worst;
}

std::vector<ExperimentRow> run_convergence(const ExperimentConfig& cfg) {
  if (cfg.l_min < 1 || cfg.l_max < cfg.l_min) {
    throw std::invalid_argument("run_convergence: degree range is empty");
  }
  const KernelParams kernel(cfg.beta, cfg.c);
  const BoundConstants consts = new_constants(cfg.n, cfg.beta, cfg.c, cfg.b0);
  const Simplex domain = experiment_simplex(cfg);

  int eval_degree = cfg.eval_lattice_degree > 0 ? cfg.eval_lattice_degree
                                                : default_eval_degree(cfg.n);
  if (eval_degree < 2 * cfg.l_max) {
    if (cfg.eval_lattice_degree > 0) {
      throw std::invalid_argument(
          "run_convergence: eval_lattice_degree must be >= 2 * l_max");
    }
    eval_degree = 2 * cfg.l_max;
  }

  TargetSpec spec = cfg.target;
  if (std::holds_alternative<DefaultTranslateTarget>(spec)) {
    spec = make_default_translate_target(domain, kernel, cfg.seed);
  }

  std::function<double(const Eigen::VectorXd&)> target_fn;
  std::optional<double> target_seminorm;
  bool bound_available = false;
  if (const auto* kt = std::get_if<KernelTranslateTarget>(&spec)) {
    HSpline target_spline =
        hspline_from_parts(kernel, kt->centers, kt->coefficients, kt->tail);
    target_seminorm = target_spline.native_seminorm();
    bound_available = true;
    target_fn = [t = std::move(target_spline)](const Eigen::VectorXd& x) {
      return t.evaluate(x);
    };
  } else if (const auto* pt = std::get_if<PolynomialTarget>(&spec)) {
    const MonomialBasis basis(cfg.n, pt->degree);
    if (pt->coefficients.size() != static_cast<Eigen::Index>(basis.size())) {
      throw std::invalid_argument("run_convergence: polynomial coefficient count "
                                  "does not match basis size");
    }
    if (pt->degree <= kernel.order() - 1) target_seminorm = 0.0;
    target_fn = [basis, coeffs = pt->coefficients](const Eigen::VectorXd& x) {
      return coeffs.dot(basis.evaluate(x));
    };
  } else {
    target_fn = analytic_function(std::get<AnalyticTarget>(spec).name);
  }

  std::vector<ExperimentRow> rows;
  rows.reserve(cfg.l_max - cfg.l_min + 1);
  for (int l = cfg.l_min; l <= cfg.l_max; ++l) {
    ExperimentRow row;
    row.l = l;
    row.delta = 1.0 / (3.0 * l * consts.c_big);
    row.num_centers = simplex_lattice_count(cfg.n, l);
    row.seminorm = target_seminorm;
    try {
      const LatticePoints centers = equally_spaced_points(domain, l);
      Eigen::VectorXd values(static_cast<Eigen::Index>(centers.points.size()));
      for (std::size_t i = 0; i < centers.points.size(); ++i) {
        values(static_cast<Eigen::Index>(i)) = target_fn(centers.points[i]);
      }
      const HSpline s = fit({kernel, centers.points, values});
      row.condition_diag = s.condition_diagnostic();
      row.max_error = sup_error(s, target_fn, domain, eval_degree);
      if (bound_available) {
        try {
          row.ln_bound = ln_new_bound(consts, row.delta, *target_seminorm);
        } catch (const std::domain_error&) {
          // degree l does not exceed the kernel order: no certified value
        }
      }
    } catch (const NumericError& e) {
      row.error = e.what();
    } catch (const std::domain_error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "l,delta,num_centers,max_error,seminorm,ln_bound,condition_diag\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d", r.l);
    out += buf;
    std::snprintf(buf, sizeof buf, ",%.17g,%ld", r.delta, r.num_centers);
    out += buf;
    append_field(out, r.max_error);
    append_field(out, r.seminorm);
    append_field(out, r.ln_bound);
    append_field(out, r.condition_diag);
    out.push_back('\n');
  }
  return out;
}

std::string emit_json(const std::vector<ExperimentRow>& rows) {
  std::string out = "[";
  char buf[64];
  bool first = true;
  for (const auto& r : rows) {
    if (!first) out.push_back(',');
    first = false;
    out += "\n{\"l\":";
    std::snprintf(buf, sizeof buf, "%d", r.l);
    out += buf;
    std::snprintf(buf, sizeof buf, ",\"delta\":%.17g,\"num_centers\":%ld", r.delta,
                  r.num_centers);
    out += buf;
    append_json_field(out, "max_error", r.max_error);
    append_json_field(out, "seminorm", r.seminorm);
    append_json_field(out, "ln_bound", r.ln_bound);
    append_json_field(out, "condition_diag", r.condition_diag);
    if (r.error) {
      out += ",\"error\":\"";
      for (const char ch : *r.error) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        if (ch == '\n') {
          out += "\\n";
          continue;
        }
        out.push_back(ch);
      }
      out.push_back('"');
    }
    out.push_back('}');
  }
  out += "\n]\n";
  return out;
}

}  // namespace mqbound
