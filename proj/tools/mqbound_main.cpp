#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mqbound/bounds.hpp"
#include "mqbound/convergence.hpp"
#include "mqbound/errors.hpp"
#include "mqbound/hspline.hpp"
#include "mqbound/kernel.hpp"
#include "mqbound/norming_measure.hpp"
#include "mqbound/polynomial_space.hpp"
#include "mqbound/simplex.hpp"
#include "mqbound/special_functions.hpp"

namespace {

constexpr const char* kVersion = "mqbound 0.1.0";

// Exit codes: 0 success, 2 usage or schema error, 3 numeric failure,
// 4 certification or verification violation.
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitViolation = 4;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<Eigen::VectorXd> parse_points(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<Eigen::VectorXd> out;
  out.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array() || row.empty()) {
      throw std::invalid_argument(std::string(what) + ": expected arrays of reals");
    }
    Eigen::VectorXd p(static_cast<Eigen::Index>(row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) p(static_cast<Eigen::Index>(i)) = row[i].get<double>();
    out.push_back(std::move(p));
  }
  return out;
}

Eigen::VectorXd parse_vector(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  return v;
}

void write_output(const std::string& data, const std::string& path) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << data;
}

// Deterministic uniforms independent of libstdc++ distribution details.
class Stream {
 public:
  explicit Stream(unsigned long long seed) : rng_(seed) {}
  double unit() { return ((rng_() >> 11) + 1.0) * 0x1.0p-53; }  // (0, 1]

 private:
  std::mt19937_64 rng_;
};

Eigen::VectorXd random_interior_point(const mqbound::Simplex& s, Stream& stream) {
  const int n = s.dim();
  Eigen::VectorXd bary(n + 1);
  for (int i = 0; i <= n; ++i) bary(i) = -std::log(stream.unit());
  bary /= bary.sum();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i <= n; ++i) x += bary(i) * s.vertices()[i];
  return x;
}

struct CommonParams {
  int n = 3;
  double beta = 1.0;
  double c = 1.0;
  double b0 = 1.0;
};

void add_common(CLI::App* cmd, CommonParams& p) {
  cmd->add_option("--n", p.n, "space dimension")->required();
  cmd->add_option("--beta", p.beta, "kernel exponent")->required();
  cmd->add_option("--c", p.c, "kernel shape parameter");
  cmd->add_option("--b0", p.b0, "free scale parameter");
}

int cmd_constants(const CommonParams& p, bool with_old, bool as_json) {
  const mqbound::BoundConstants bc = mqbound::new_constants(p.n, p.beta, p.c, p.b0);
  std::optional<mqbound::OldBoundConstants> oc;
  std::vector<long long> gseq;
  if (with_old) {
    oc = mqbound::old_constants(p.n, p.beta, p.c, p.b0, bc.rho);
    for (int k = 1; k <= p.n; ++k) gseq.push_back(mqbound::gamma_seq(k));
  }
  const double lambda_prime = std::exp(bc.ln_lambda_prime);
  std::string out;
  if (as_json) {
    out += "{\"n\":" + std::to_string(bc.n) + ",\"beta\":" + fmt17(bc.beta) +
           ",\"c\":" + fmt17(bc.c) + ",\"b0\":" + fmt17(bc.b0) +
           ",\"case\":\"" + mqbound::to_string(bc.case_id) + "\"" +
           ",\"rho\":" + fmt17(bc.rho) + ",\"s\":" + std::to_string(bc.s) +
           ",\"ln_delta0_const\":" + fmt17(bc.ln_delta0_const) +
           ",\"delta0_const\":" +
           (bc.ln_delta0_const < 700.0 ? fmt17(std::exp(bc.ln_delta0_const)) : "null") +
           ",\"c_big\":" + fmt17(bc.c_big) + ",\"delta0\":" + fmt17(bc.delta0) +
           ",\"lambda_prime\":" + fmt17(lambda_prime) +
           ",\"ln_lambda_prime\":" + fmt17(bc.ln_lambda_prime);
    if (oc) {
      out += ",\"gamma_seq\":[";
      for (std::size_t i = 0; i < gseq.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(gseq[i]);
      }
      out += "],\"gamma_n\":" + std::to_string(oc->gamma_n) +
             ",\"rho_prime\":" + fmt17(oc->rho_prime) +
             ",\"ln_c_old\":" + fmt17(oc->ln_c_old) +
             ",\"ln_lambda_old\":" + fmt17(oc->ln_lambda_old) +
             ",\"ln_abs_ln_lambda_old\":" + fmt17(oc->ln_abs_ln_lambda_old) +
             ",\"one_minus_lambda_old\":" + fmt17(-std::expm1(oc->ln_lambda_old));
    }
    out += "}\n";
  } else {
    out += "n: " + std::to_string(bc.n) + "\nbeta: " + fmt6(bc.beta) +
           "\nc: " + fmt6(bc.c) + "\nb0: " + fmt6(bc.b0) + "\n";
    out += "case: " + mqbound::to_string(bc.case_id) + "\n";
    out += "rho: " + fmt6(bc.rho) + "\n";
    out += "s: " + std::to_string(bc.s) + "\n";
    if (bc.ln_delta0_const < 700.0) {
      out += "Delta0: " + fmt6(std::exp(bc.ln_delta0_const)) + " (ln: " +
             fmt6(bc.ln_delta0_const) + ")\n";
    } else {
      out += "Delta0: exp(" + fmt6(bc.ln_delta0_const) + ")\n";
    }
    out += "C: " + fmt6(bc.c_big) + "\n";
    out += "delta0: " + fmt6(bc.delta0) + "\n";
    out += "lambda': " + fmt6(lambda_prime) + " (ln: " + fmt6(bc.ln_lambda_prime) + ")\n";
    if (oc) {
      out += "gamma_seq:";
      for (const long long g : gseq) out += " " + std::to_string(g);
      out += "\ngamma_n: " + std::to_string(oc->gamma_n) + "\n";
      out += "rho': " + fmt6(oc->rho_prime) + "\n";
      out += "ln C_old: " + fmt6(oc->ln_c_old) + "\n";
      out += "ln lambda_old: " + fmt6(oc->ln_lambda_old) + " (ln|ln lambda_old|: " +
             fmt6(oc->ln_abs_ln_lambda_old) + ")\n";
      out += "1 - lambda_old: " + fmt6(-std::expm1(oc->ln_lambda_old)) + "\n";
    }
  }
  std::cout << out;
  return 0;
}

int cmd_bound(const CommonParams& p, double delta, double seminorm, bool as_json) {
  const mqbound::BoundConstants bc = mqbound::new_constants(p.n, p.beta, p.c, p.b0);
  const long l = mqbound::choose_degree(delta, bc.c_big);
  const double ln_bound = mqbound::ln_new_bound(bc, delta, seminorm);
  const double ln_cl =
      mqbound::ln_cl_upper(p.n, p.beta, p.c, l, bc.rho, bc.ln_delta0_const);
  if (as_json) {
    std::cout << "{\"l\":" << l << ",\"delta\":" << fmt17(delta)
              << ",\"seminorm\":" << fmt17(seminorm) << ",\"ln_bound\":"
              << (std::isfinite(ln_bound) ? fmt17(ln_bound) : "null") << ",\"bound\":"
              << (ln_bound < 700.0 ? fmt17(std::exp(ln_bound)) : "null")
              << ",\"ln_cl_upper\":" << fmt17(ln_cl) << "}\n";
  } else {
    std::cout << "l: " << l << "\n";
    std::cout << "ln_bound: " << fmt6(ln_bound) << "\n";
    if (ln_bound < 700.0) {
      std::cout << "bound: " << fmt6(std::exp(ln_bound)) << "\n";
    }
    std::cout << "ln_cl_upper: " << fmt6(ln_cl) << "\n";
  }
  return 0;
}

int cmd_compare(const CommonParams& p, std::vector<double> deltas, bool as_json) {
  const mqbound::BoundConstants bc = mqbound::new_constants(p.n, p.beta, p.c, p.b0);
  if (deltas.empty()) {
    deltas = {bc.delta0, bc.delta0 / 2.0, bc.delta0 / 4.0, bc.delta0 / 8.0};
  }
  const auto rows = mqbound::compare_bounds(p.n, p.beta, p.c, p.b0, deltas);
  std::string out;
  if (as_json) {
    out += "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out += ",";
      out += "\n{\"delta\":" + fmt17(rows[i].delta) +
             ",\"new_decay\":" + fmt17(rows[i].new_decay) +
             ",\"old_decay\":" + fmt17(rows[i].old_decay) +
             ",\"ratio_old_over_new\":" + fmt17(rows[i].ratio_old_over_new) + "}";
    }
    out += "\n]\n";
  } else {
    out += "delta,new_decay,old_decay,ratio_old_over_new\n";
    for (const auto& r : rows) {
      out += fmt17(r.delta) + "," + fmt17(r.new_decay) + "," + fmt17(r.old_decay) +
             "," + fmt17(r.ratio_old_over_new) + "\n";
    }
  }
  std::cout << out;
  return 0;
}

mqbound::Simplex simplex_from_option(const std::string& path, int n) {
  if (path.empty()) return mqbound::Simplex::unit_right(n);
  const json j = load_json_file(path);
  if (!j.contains("vertices")) {
    throw std::invalid_argument("simplex file: missing \"vertices\"");
  }
  return mqbound::Simplex(parse_points(j["vertices"], "vertices"));
}

int cmd_points(int n, int l, const std::string& simplex_path) {
  const mqbound::Simplex s = simplex_from_option(simplex_path, n);
  if (s.dim() != n) throw std::invalid_argument("simplex dimension does not match --n");
  const mqbound::LatticePoints pts = mqbound::equally_spaced_points(s, l);
  std::string out;
  for (int j = 0; j <= n; ++j) out += "k" + std::to_string(j + 1) + ",";
  for (int d = 0; d < n; ++d) {
    out += "x" + std::to_string(d + 1);
    out += (d + 1 < n) ? "," : "";
  }
  out += "\n";
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    for (int j = 0; j <= n; ++j) out += std::to_string(pts.multi_indices[i][j]) + ",";
    for (int d = 0; d < n; ++d) {
      out += fmt17(pts.points[i](d));
      out += (d + 1 < n) ? "," : "";
    }
    out += "\n";
  }
  std::cout << out;
  return 0;
}

int cmd_interpolate(const std::string& problem_path, const std::string& eval_path,
                    const std::string& output_path) {
  const json pj = load_json_file(problem_path);
  for (const char* key : {"n", "beta", "c", "centers", "values"}) {
    if (!pj.contains(key)) {
      throw std::invalid_argument(std::string("problem file: missing \"") + key + "\"");
    }
  }
  const int n = pj["n"].get<int>();
  const mqbound::KernelParams kernel(pj["beta"].get<double>(), pj["c"].get<double>());
  const auto centers = parse_points(pj["centers"], "centers");
  const Eigen::VectorXd values = parse_vector(pj["values"], "values");
  for (const auto& p : centers) {
    if (p.size() != n) throw std::invalid_argument("problem file: center dimension != n");
  }

  const json ej = load_json_file(eval_path);
  const auto points = parse_points(ej.is_array() ? ej : ej.at("points"), "eval points");

  mqbound::HSpline s = [&] {
    try {
      return mqbound::fit({kernel, centers, values});
    } catch (const mqbound::NumericError&) {
      throw;
    } catch (const std::exception& e) {
      // solver-stage failure (coincident or non-determining centers), not a
      // schema problem
      throw mqbound::NumericError(e.what());
    }
  }();

  std::string out = "{\"values\":[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += fmt17(s.evaluate(points[i]));
  }
  out += "],\"seminorm\":" + fmt17(s.native_seminorm()) +
         ",\"condition_diag\":" + fmt17(s.condition_diagnostic()) + "}\n";
  write_output(out, output_path);
  return 0;
}

mqbound::ExperimentConfig parse_config(const json& j) {
  mqbound::ExperimentConfig cfg;
  for (const char* key : {"n", "beta"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("config: missing \"") + key + "\"");
    }
  }
  cfg.n = j["n"].get<int>();
  cfg.beta = j["beta"].get<double>();
  cfg.c = j.value("c", 1.0);
  cfg.b0 = j.value("b0", 1.0);
  cfg.l_min = j.value("l_min", 1);
  cfg.l_max = j.value("l_max", 6);
  cfg.eval_lattice_degree = j.value("eval_lattice_degree", 0);
  cfg.seed = j.value("seed", 12345ULL);
  const std::string format = j.value("format", "csv");
  if (format == "csv") {
    cfg.format = mqbound::ExperimentConfig::Format::Csv;
  } else if (format == "json") {
    cfg.format = mqbound::ExperimentConfig::Format::Json;
  } else {
    throw std::invalid_argument("config: format must be \"csv\" or \"json\"");
  }
  if (j.contains("simplex")) {
    cfg.simplex_vertices = parse_points(j["simplex"].at("vertices"), "simplex vertices");
  }
  if (j.contains("target")) {
    const json& t = j["target"];
    const std::string type = t.value("type", "default");
    if (type == "kernel_translates") {
      mqbound::KernelTranslateTarget kt;
      kt.centers = parse_points(t.at("centers"), "target centers");
      kt.coefficients = parse_vector(t.at("coefficients"), "target coefficients");
      cfg.target = std::move(kt);
    } else if (type == "polynomial") {
      mqbound::PolynomialTarget pt;
      pt.degree = t.at("degree").get<int>();
      pt.coefficients = parse_vector(t.at("coefficients"), "target coefficients");
      cfg.target = std::move(pt);
    } else if (type == "analytic") {
      cfg.target = mqbound::AnalyticTarget{t.at("name").get<std::string>()};
    } else if (type == "default") {
      cfg.target = mqbound::DefaultTranslateTarget{};
    } else {
      throw std::invalid_argument("config: unknown target type \"" + type + "\"");
    }
  }
  return cfg;
}

int cmd_converge(const std::string& config_path, const std::string& output_path) {
  const mqbound::ExperimentConfig cfg = parse_config(load_json_file(config_path));
  const auto rows = mqbound::run_convergence(cfg);
  const std::string out = cfg.format == mqbound::ExperimentConfig::Format::Csv
                              ? mqbound::emit_csv(rows)
                              : mqbound::emit_json(rows);
  write_output(out, output_path);
  for (const auto& r : rows) {
    if (r.ln_bound && r.max_error && *r.max_error > 0.0 &&
        std::log(*r.max_error) > *r.ln_bound + 1e-9) {
      std::cerr << "certification violated at l=" << r.l
                << ": ln(max_error)=" << fmt6(std::log(*r.max_error))
                << " > ln_bound=" << fmt6(*r.ln_bound) << "\n";
      return kExitViolation;
    }
  }
  return 0;
}

int verify_moment(int n, double beta, long lmax) {
  const auto report = mqbound::verify_moment_lemma(n, beta, lmax);
  double worst = std::numeric_limits<double>::infinity();
  long worst_l = 0;
  for (const auto& r : report) {
    if (r.slack < worst) {
      worst = r.slack;
      worst_l = r.l;
    }
  }
  std::cout << "moment inequality: n=" << n << " beta=" << fmt6(beta) << " l=["
            << report.front().l << "," << report.back().l << "] worst slack "
            << fmt6(worst) << " at l=" << worst_l << "\n";
  if (worst < -1e-9) {
    std::cout << "VIOLATION at l=" << worst_l << ": slack " << fmt17(worst) << "\n";
    return kExitViolation;
  }
  std::cout << "ok\n";
  return 0;
}

int verify_factorial(long lmax) {
  const auto report = mqbound::verify_factorial_lemma(lmax);
  double worst = std::numeric_limits<double>::infinity();
  long worst_l = 0;
  for (const auto& r : report) {
    if (r.slack < worst) {
      worst = r.slack;
      worst_l = r.l;
    }
  }
  std::cout << "factorial inequality: l=[1," << lmax << "] worst slack " << fmt6(worst)
            << " at l=" << worst_l << "\n";
  if (worst < -1e-12) {
    std::cout << "VIOLATION at l=" << worst_l << ": slack " << fmt17(worst) << "\n";
    return kExitViolation;
  }
  std::cout << "ok\n";
  return 0;
}

int verify_lebesgue(int n, long lmax, int sample_degree) {
  const mqbound::Simplex s = mqbound::Simplex::unit_right(n);
  bool ok = true;
  for (long l = 1; l <= lmax; ++l) {
    int sd = sample_degree;
    if (sd <= 0) {
      sd = n == 1 ? 64 : (n == 2 ? 40 : 16);
    }
    sd = std::max(sd, static_cast<int>(2 * l));
    const mqbound::LagrangeBasis basis(mqbound::equally_spaced_points(s, static_cast<int>(l)));
    const double est = mqbound::lebesgue_estimate(basis, s, sd);
    const double bound = std::exp(mqbound::ln_binomial(2 * l - 1, l));
    const bool row_ok = est <= bound + 1e-9;
    ok = ok && row_ok;
    std::cout << "l=" << l << " estimate=" << fmt6(est) << " binomial_bound="
              << fmt6(bound) << (row_ok ? "" : " VIOLATION") << "\n";
  }
  std::cout << (ok ? "ok\n" : "violations found\n");
  return ok ? 0 : kExitViolation;
}

int verify_measure(int n, int l, int trials) {
  const mqbound::Simplex s = mqbound::Simplex::unit_right(n);
  const mqbound::MonomialBasis basis(n, l);
  const double tv_bound = std::exp(mqbound::ln_binomial(2 * l - 1, l));
  Stream stream(2024);
  double max_tv = 0.0, max_resid = 0.0;
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    const Eigen::VectorXd x = random_interior_point(s, stream);
    const mqbound::NormingMeasure m = mqbound::norming_weights(s, l, x);
    const double tv = mqbound::total_variation(m);
    max_tv = std::max(max_tv, tv);
    const Eigen::VectorXd target_moments = basis.evaluate(x);
    Eigen::VectorXd achieved = Eigen::VectorXd::Zero(target_moments.size());
    for (std::size_t j = 0; j < m.support.points.size(); ++j) {
      achieved += m.weights(static_cast<Eigen::Index>(j)) *
                  basis.evaluate(m.support.points[j]);
    }
    for (Eigen::Index k = 0; k < target_moments.size(); ++k) {
      const double resid = std::fabs(achieved(k) - target_moments(k)) /
                           std::max(1.0, std::fabs(target_moments(k)));
      max_resid = std::max(max_resid, resid);
    }
    if (tv > tv_bound + 1e-9 || max_resid > 1e-9) ok = false;
  }
  std::cout << "norming measure: n=" << n << " l=" << l << " trials=" << trials
            << " max_tv=" << fmt6(max_tv) << " tv_bound=" << fmt6(tv_bound)
            << " max_residual=" << fmt6(max_resid) << "\n";
  std::cout << (ok ? "ok\n" : "violations found\n");
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiquadric h-spline interpolation with certified error bounds"};
  app.require_subcommand(1);
  bool header = false;
  app.add_flag("--header", header, "print a version header line before output");

  CommonParams cp;
  bool with_old = false;
  bool as_json = false;

  auto* constants = app.add_subcommand("constants", "bound constants for one parameter set");
  add_common(constants, cp);
  constants->add_flag("--old", with_old, "include the earlier bound's constants");
  constants->add_flag("--json", as_json, "machine-readable output");

  double delta = 0.0, seminorm = 1.0;
  auto* bound = app.add_subcommand("bound", "certified error-bound value");
  add_common(bound, cp);
  bound->add_option("--delta", delta, "spacing parameter, 0 < delta <= 1/(3C)")->required();
  bound->add_option("--seminorm", seminorm, "native semi-norm of the target");
  bound->add_flag("--json", as_json, "machine-readable output");

  std::string deltas_arg;
  auto* compare = app.add_subcommand("compare", "decay comparison against the earlier bound");
  add_common(compare, cp);
  compare->add_option("--deltas", deltas_arg, "comma-separated delta list");
  compare->add_flag("--json", as_json, "machine-readable output");

  int points_n = 1, points_l = 1;
  std::string simplex_path;
  auto* points = app.add_subcommand("points", "equally spaced lattice points (CSV)");
  points->add_option("--n", points_n, "space dimension")->required();
  points->add_option("--l", points_l, "lattice degree")->required();
  points->add_option("--simplex", simplex_path, "JSON file with {\"vertices\": [...]}");

  std::string problem_path, eval_path, output_path;
  auto* interpolate = app.add_subcommand("interpolate", "fit and evaluate an h-spline");
  interpolate->add_option("--problem", problem_path, "problem JSON")->required();
  interpolate->add_option("--eval", eval_path, "evaluation points JSON")->required();
  interpolate->add_option("--output,-o", output_path, "output file (default stdout)");

  std::string config_path;
  auto* converge = app.add_subcommand("converge", "convergence study with certified bounds");
  converge->add_option("--config", config_path, "experiment config JSON")->required();
  converge->add_option("--output,-o", output_path, "output file (default stdout)");

  std::string lemma;
  long lmax = 0;
  int verify_l = 0, trials = 20, sample_degree = 0;
  auto* verify = app.add_subcommand("verify", "numeric verification sweeps");
  verify->add_option("--lemma", lemma, "moment | factorial | lebesgue | measure")
      ->required();
  verify->add_option("--n", cp.n, "space dimension");
  verify->add_option("--beta", cp.beta, "kernel exponent");
  verify->add_option("--lmax", lmax, "upper degree of the sweep");
  verify->add_option("--l", verify_l, "lattice degree (measure)");
  verify->add_option("--trials", trials, "random targets per case (measure)");
  verify->add_option("--sample-degree", sample_degree, "sampling lattice degree (lebesgue)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (header) std::cout << "# " << kVersion << "\n";

  try {
    if (constants->parsed()) return cmd_constants(cp, with_old, as_json);
    if (bound->parsed()) return cmd_bound(cp, delta, seminorm, as_json);
    if (compare->parsed()) {
      std::vector<double> deltas;
      if (!deltas_arg.empty()) {
        std::stringstream ss(deltas_arg);
        std::string item;
        while (std::getline(ss, item, ',')) deltas.push_back(std::stod(item));
      }
      return cmd_compare(cp, deltas, as_json);
    }
    if (points->parsed()) return cmd_points(points_n, points_l, simplex_path);
    if (interpolate->parsed()) return cmd_interpolate(problem_path, eval_path, output_path);
    if (converge->parsed()) return cmd_converge(config_path, output_path);
    if (verify->parsed()) {
      if (lemma == "moment") {
        if (lmax == 0) lmax = 60;
        return verify_moment(cp.n, cp.beta, lmax);
      }
      if (lemma == "factorial") {
        if (lmax == 0) lmax = 300;
        return verify_factorial(lmax);
      }
      if (lemma == "lebesgue") {
        if (lmax == 0) lmax = 6;
        return verify_lebesgue(cp.n, lmax, sample_degree);
      }
      if (lemma == "measure") {
        if (verify_l == 0) {
          std::cerr << "verify --lemma measure requires --l\n";
          return kExitUsage;
        }
        return verify_measure(cp.n, verify_l, trials);
      }
      std::cerr << "unknown lemma \"" << lemma << "\"\n";
      return kExitUsage;
    }
  } catch (const mqbound::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
