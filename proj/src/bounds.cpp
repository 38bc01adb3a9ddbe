#include "mqbound/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mqbound/kernel.hpp"
#include "mqbound/special_functions.hpp"

namespace mqbound {

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::A_i: return "A_i";
    case BoundCase::A_ii: return "A_ii";
    case BoundCase::B_i: return "B_i";
    case BoundCase::B_ii: return "B_ii";
    case BoundCase::C: return "C";
  }
  return "?";
}

RhoDelta0 rho_delta0(int n, double beta) {
  if (n < 1) throw std::domain_error("rho_delta0: n must be >= 1");
  const int m = cpd_order(beta);
  const double d = static_cast<double>(n) - beta;
  RhoDelta0 out;
  if (d > 3.0) {
    out.s = static_cast<int>(std::ceil((d - 3.0) / 2.0));
    if (beta < 0.0) {
      out.case_id = BoundCase::A_i;
      out.rho = (3.0 + out.s) / 3.0;
      // Delta0 = (2+s)(1+s)...3 / rho^2 = (2+s)!/2 / rho^2
      out.ln_delta0_const =
          ln_factorial(2 + out.s) - std::log(2.0) - 2.0 * std::log(out.rho);
    } else {
      out.case_id = BoundCase::A_ii;
      out.rho = 1.0 + static_cast<double>(out.s) / (2 * m + 3);
      // Delta0 = (2m+2+s)(2m+1+s)...(2m+3) / rho^(2m+2)
      out.ln_delta0_const = ln_factorial(2 * m + 2 + out.s) - ln_factorial(2 * m + 2) -
                            (2 * m + 2) * std::log(out.rho);
    }
  } else if (d <= 1.0) {
    out.s = -static_cast<int>(std::ceil((d - 3.0) / 2.0));
    out.rho = 1.0;
    if (beta < 0.0) {
      out.case_id = BoundCase::B_i;
      out.ln_delta0_const = std::log(0.5);
    } else {
      out.case_id = BoundCase::B_ii;
      // Delta0 = 1 / ((2m+2)(2m+1)...(2m-s+3))
      out.ln_delta0_const = -(ln_factorial(2 * m + 2) - ln_factorial(2 * m + 2 - out.s));
    }
  } else {
    out.case_id = BoundCase::C;
    out.rho = 1.0;
    out.ln_delta0_const = 0.0;
    out.s = 0;
  }
  return out;
}

BoundConstants new_constants(int n, double beta, double c, double b0) {
  if (!(c > 0.0)) throw std::domain_error("new_constants: c must be positive");
  if (!(b0 > 0.0)) throw std::domain_error("new_constants: b0 must be positive");
  const RhoDelta0 rd = rho_delta0(n, beta);
  BoundConstants out;
  out.n = n;
  out.beta = beta;
  out.c = c;
  out.b0 = b0;
  out.rho = rd.rho;
  out.ln_delta0_const = rd.ln_delta0_const;
  out.s = rd.s;
  out.case_id = rd.case_id;
  out.c_big = std::max(2.0 / (3.0 * b0), 8.0 * rd.rho);
  out.delta0 = 1.0 / (3.0 * out.c_big);
  out.ln_lambda_prime = std::log(2.0 / 3.0) / (3.0 * out.c_big);
  return out;
}

long choose_degree(double delta, double c_big) {
  if (!(delta > 0.0)) throw std::domain_error("choose_degree: delta must be positive");
  const double delta0 = 1.0 / (3.0 * c_big);
  if (delta > delta0 * (1.0 + 1e-12)) {
    throw std::domain_error("choose_degree: delta exceeds delta0 = 1/(3C)");
  }
  // Smallest integer in [1/(3 C delta), 2/(3 C delta)]; the window has
  // length >= 1 since delta <= delta0.  The tolerant ceiling absorbs the
  // last-ulp roundoff of the division when the endpoint is an exact
  // integer, without ever crossing a full integer gap.
  const double x = 1.0 / (3.0 * delta * c_big);
  double l = std::ceil(x * (1.0 - 4e-16) - 1e-12);
  if (l < 1.0) l = 1.0;
  return static_cast<long>(l);
}

double ln_cl_upper(int n, double beta, double c, long l, double rho,
                   double ln_delta0_const) {
  const int m = cpd_order(beta);
  if (l < m + 1) {
    throw std::domain_error("ln_cl_upper: requires l >= m + 1");
  }
  return 0.25 * (n + beta + 1.0) * std::log(2.0) +
         0.25 * (n + 1.0) * std::log(M_PI) +
         0.5 * (std::log(static_cast<double>(n)) + unit_ball_volume_ln(n)) +
         0.5 * beta * std::log(c) - static_cast<double>(l) * std::log(c) +
         0.5 * ln_delta0_const + static_cast<double>(l) * std::log(2.0 * rho);
}

double ln_new_bound(const BoundConstants& consts, double delta, double seminorm) {
  if (seminorm < 0.0) throw std::domain_error("ln_new_bound: negative seminorm");
  const long l = choose_degree(delta, consts.c_big);
  const int m = cpd_order(consts.beta);
  if (l <= m) {
    throw std::domain_error(
        "ln_new_bound: delta too large for this kernel order (selected degree " +
        std::to_string(l) + " <= m = " + std::to_string(m) + ")");
  }
  if (seminorm == 0.0) return -std::numeric_limits<double>::infinity();
  const int n = consts.n;
  const double beta = consts.beta;
  return 0.25 * (n + beta - 7.0) * std::log(2.0) +
         0.25 * (n - 1.0) * std::log(M_PI) +
         0.5 * (std::log(static_cast<double>(n)) + unit_ball_volume_ln(n)) +
         0.5 * beta * std::log(consts.c) - static_cast<double>(l) * std::log(consts.c) +
         0.5 * consts.ln_delta0_const + 0.5 * std::log(3.0 * consts.c_big) +
         0.5 * std::log(delta) + consts.ln_lambda_prime / delta + std::log(seminorm);
}

long long gamma_seq(int n) {
  if (n < 1) throw std::domain_error("gamma_seq: n must be >= 1");
  if (n > 16) {
    throw std::overflow_error("gamma_seq: gamma_n exceeds long long range for n > 16");
  }
  long long g = 2;
  for (int k = 2; k <= n; ++k) {
    g = 2LL * k * (1 + g);
  }
  return g;
}

OldBoundConstants old_constants(int n, double beta, double c, double b0, double rho) {
  cpd_order(beta);  // rejects Gamma poles; beta enters only through rho
  if (!(c > 0.0)) throw std::domain_error("old_constants: c must be positive");
  if (!(b0 > 0.0)) throw std::domain_error("old_constants: b0 must be positive");
  OldBoundConstants out;
  out.gamma_n = gamma_seq(n);
  out.rho_prime = rho / c;
  const double g = static_cast<double>(out.gamma_n);
  // C_old = max{2 rho' sqrt(n) e^{2 n gamma_n}, 2/(3 b0)}; the exponential
  // branch enters additively as 2 n gamma_n in log space.
  const double ln_branch_exp =
      std::log(2.0 * out.rho_prime) + 0.5 * std::log(static_cast<double>(n)) +
      2.0 * n * g;
  const double ln_branch_b0 = std::log(2.0 / (3.0 * b0));
  out.ln_c_old = std::max(ln_branch_exp, ln_branch_b0);
  // ln lambda = ln(2/3) / (3 C gamma_n):  |ln lambda| in log space is
  // ln(ln(3/2)) - ln 3 - ln gamma_n - ln C.
  out.ln_abs_ln_lambda_old =
      std::log(std::log(1.5)) - std::log(3.0) - std::log(g) - out.ln_c_old;
  out.ln_lambda_old = -std::exp(out.ln_abs_ln_lambda_old);  // underflows to -0 eventually
  return out;
}

std::vector<MomentSlack> verify_moment_lemma(int n, double beta, long l_max) {
  const int m = cpd_order(beta);
  const long l_lo = 2L * m + 2;
  if (l_max < l_lo) {
    throw std::domain_error("verify_moment_lemma: l_max must be >= 2m + 2");
  }
  const RhoDelta0 rd = rho_delta0(n, beta);
  std::vector<MomentSlack> out;
  out.reserve(l_max - l_lo + 1);
  for (long l = l_lo; l <= l_max; ++l) {
    const double l_prime = static_cast<double>(l) + 0.5 * (n - beta - 3.0);
    // Gamma(l'+1) is exactly the integral the lemma bounds; l' > 0 in range.
    const double slack = rd.ln_delta0_const + static_cast<double>(l) * std::log(rd.rho) +
                         ln_factorial(l) - std::lgamma(l_prime + 1.0);
    out.push_back({l, slack});
  }
  return out;
}

std::vector<FactorialSlack> verify_factorial_lemma(long l_max) {
  if (l_max < 1) throw std::domain_error("verify_factorial_lemma: l_max must be >= 1");
  std::vector<FactorialSlack> out;
  out.reserve(l_max);
  for (long l = 1; l <= l_max; ++l) {
    const double lhs = 0.5 * ln_factorial(2 * l) - ln_factorial(l);
    out.push_back({l, static_cast<double>(l) * std::log(2.0) - lhs});
  }
  return out;
}

std::vector<CompareRow> compare_bounds(int n, double beta, double c, double b0,
                                       const std::vector<double>& deltas) {
  const BoundConstants nc = new_constants(n, beta, c, b0);
  const OldBoundConstants oc = old_constants(n, beta, c, b0, nc.rho);
  std::vector<CompareRow> out;
  out.reserve(deltas.size());
  for (const double delta : deltas) {
    if (!(delta > 0.0) || delta > nc.delta0 * (1.0 + 1e-12)) {
      throw std::domain_error("compare_bounds: delta must lie in (0, delta0]");
    }
    CompareRow row;
    row.delta = delta;
    row.new_decay = nc.ln_lambda_prime / delta;
    row.old_decay = oc.ln_lambda_old / delta;
    row.ratio_old_over_new =
        std::exp(oc.ln_abs_ln_lambda_old - std::log(-nc.ln_lambda_prime));
    out.push_back(row);
  }
  return out;
}

}  // namespace mqbound
