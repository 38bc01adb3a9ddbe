#pragma once

#include <string>
#include <vector>

namespace mqbound {

// Which branch of the case analysis behind the moment inequality
//   integral_0^inf r^{l'} e^{-r} dr <= Delta0 * rho^l * l!
// applies: A (n - beta > 3), B (n - beta <= 1), C (1 < n - beta <= 3),
// with _i / _ii distinguishing beta < 0 from beta > 0.
enum class BoundCase { A_i, A_ii, B_i, B_ii, C };

std::string to_string(BoundCase c);

struct RhoDelta0 {
  double rho = 1.0;           // growth base, >= 1
  double ln_delta0_const = 0; // ln(Delta0); log space since Delta0 can be huge
  int s = 0;                  // ceiling shift |ceil((n - beta - 3) / 2)|
  BoundCase case_id = BoundCase::C;
};

// Case analysis for (rho, Delta0) as functions of n and beta.
RhoDelta0 rho_delta0(int n, double beta);

// Constants of the improved bound for one parameter set:
//   C = max{2/(3 b0), 8 rho},  delta0 = 1/(3 C),  lambda' = (2/3)^(1/(3C)).
struct BoundConstants {
  int n = 0;
  double beta = 0;
  double c = 1;
  double b0 = 1;
  double rho = 1;
  double ln_delta0_const = 0;
  int s = 0;
  BoundCase case_id = BoundCase::C;
  double c_big = 0;
  double delta0 = 0;
  double ln_lambda_prime = 0;  // always negative: 0 < lambda' < 1
};

BoundConstants new_constants(int n, double beta, double c, double b0);

// Smallest positive integer l with 1 <= 3 l delta C <= 2; requires
// 0 < delta <= 1/(3C), where the window always contains an integer.
long choose_degree(double delta, double c_big);

// ln of the coefficient bound
//   c_l <= 2^((n+beta+1)/4) pi^((n+1)/4) sqrt(n alpha_n)
//          c^(beta/2) c^(-l) sqrt(Delta0) (2 rho)^l,
// valid for l >= m+1.
double ln_cl_upper(int n, double beta, double c, long l, double rho,
                   double ln_delta0_const);

// ln of the certified interpolation error bound
//   2^((n+beta-7)/4) pi^((n-1)/4) sqrt(n alpha_n) c^(beta/2) c^(-l)
//   sqrt(Delta0) sqrt(3C) sqrt(delta) lambda'^(1/delta) * seminorm
// with l = choose_degree(delta).  Returns -inf for seminorm 0.  Throws
// std::domain_error when delta > delta0 or when the selected degree does
// not exceed the kernel order.
double ln_new_bound(const BoundConstants& consts, double delta, double seminorm);

// gamma_1 = 2, gamma_n = 2n(1 + gamma_{n-1}); exact, range-checked
// (overflows long long past n = 16).
long long gamma_seq(int n);

// Constants of the earlier bound: lambda = (2/3)^(1/(3 C gamma_n)) with
// C = max{2 rho' sqrt(n) e^{2 n gamma_n}, 2/(3 b0)}, rho' = rho / c.
// Everything is carried in log space: e^{2 n gamma_n} overflows any float
// already at n = 3.
struct OldBoundConstants {
  long long gamma_n = 0;
  double rho_prime = 0;
  double ln_c_old = 0;
  double ln_lambda_old = 0;          // may underflow to -0 for n >= 4
  double ln_abs_ln_lambda_old = 0;   // ln |ln lambda|, always representable
};

OldBoundConstants old_constants(int n, double beta, double c, double b0, double rho);

struct MomentSlack {
  long l = 0;
  double slack = 0;  // ln(Delta0 rho^l l!) - ln Gamma(l' + 1), l' = l + (n-beta-3)/2
};

// Checks Gamma(l'+1) <= Delta0 rho^l l! for every l in [2m+2, l_max].
std::vector<MomentSlack> verify_moment_lemma(int n, double beta, long l_max);

struct FactorialSlack {
  long l = 0;
  double slack = 0;  // l ln 2 - (ln((2l)!)/2 - ln(l!))
};

// Checks sqrt((2l)!) / l! <= 2^l for l = 1..l_max, in log space.
std::vector<FactorialSlack> verify_factorial_lemma(long l_max);

struct CompareRow {
  double delta = 0;
  double new_decay = 0;            // ln(lambda') / delta
  double old_decay = 0;            // ln(lambda_old) / delta (may be -0)
  double ratio_old_over_new = 0;   // |ln lambda_old| / |ln lambda'|
};

std::vector<CompareRow> compare_bounds(int n, double beta, double c, double b0,
                                       const std::vector<double>& deltas);

}  // namespace mqbound
