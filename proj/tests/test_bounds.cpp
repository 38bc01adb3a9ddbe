#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mqbound/bounds.hpp"
#include "mqbound/kernel.hpp"
#include "mqbound/special_functions.hpp"

using mqbound::BoundCase;
using mqbound::BoundConstants;
using mqbound::CompareRow;
using mqbound::OldBoundConstants;
using mqbound::RhoDelta0;
using mqbound::choose_degree;
using mqbound::compare_bounds;
using mqbound::gamma_seq;
using mqbound::ln_cl_upper;
using mqbound::ln_new_bound;
using mqbound::new_constants;
using mqbound::old_constants;
using mqbound::rho_delta0;
using mqbound::verify_factorial_lemma;
using mqbound::verify_moment_lemma;

namespace {

// Independent oracle for the case analysis: direct products and ratios,
// no lgamma involved.
struct CaseOracle {
  double rho;
  double delta0;
  BoundCase case_id;
};

CaseOracle case_oracle(int n, double beta) {
  const int m = beta < 0.0 ? 0 : static_cast<int>(std::ceil(beta / 2.0));
  const double d = n - beta;
  if (d > 3.0) {
    const int s = static_cast<int>(std::ceil((d - 3.0) / 2.0));
    if (beta < 0.0) {
      const double rho = (3.0 + s) / 3.0;
      double prod = 1.0;
      for (int j = 3; j <= 2 + s; ++j) prod *= j;
      return {rho, prod / (rho * rho), BoundCase::A_i};
    }
    const double rho = 1.0 + static_cast<double>(s) / (2 * m + 3);
    double prod = 1.0;
    for (int j = 2 * m + 3; j <= 2 * m + 2 + s; ++j) prod *= j;
    return {rho, prod / std::pow(rho, 2 * m + 2), BoundCase::A_ii};
  }
  if (d <= 1.0) {
    const int s = -static_cast<int>(std::ceil((d - 3.0) / 2.0));
    if (beta < 0.0) return {1.0, 0.5, BoundCase::B_i};
    double prod = 1.0;
    for (int j = 2 * m - s + 3; j <= 2 * m + 2; ++j) prod *= j;
    return {1.0, 1.0 / prod, BoundCase::B_ii};
  }
  return {1.0, 1.0, BoundCase::C};
}

}  // namespace

TEST_CASE("case analysis spot values") {
  // (3, 1): 1 < n - beta <= 3
  const RhoDelta0 c = rho_delta0(3, 1.0);
  CHECK(c.case_id == BoundCase::C);
  CHECK(c.rho == doctest::Approx(1.0));
  CHECK(std::exp(c.ln_delta0_const) == doctest::Approx(1.0).epsilon(1e-13));

  // (5, 1): s = 1, m = 1, rho = 6/5, Delta0 = 5 / 1.2^4
  const RhoDelta0 a = rho_delta0(5, 1.0);
  CHECK(a.case_id == BoundCase::A_ii);
  CHECK(a.s == 1);
  CHECK(a.rho == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(std::exp(a.ln_delta0_const) ==
        doctest::Approx(5.0 / std::pow(1.2, 4)).epsilon(1e-10));

  // (1, 1): s = 1, product (2m+2)...(2m-s+3) = 4, Delta0 = 1/4
  const RhoDelta0 b = rho_delta0(1, 1.0);
  CHECK(b.case_id == BoundCase::B_ii);
  CHECK(b.s == 1);
  CHECK(b.rho == doctest::Approx(1.0));
  CHECK(std::exp(b.ln_delta0_const) == doctest::Approx(0.25).epsilon(1e-12));

  // (4, -1): s = 1, rho = 4/3, Delta0 = 3 / (4/3)^2 = 27/16
  const RhoDelta0 ai = rho_delta0(4, -1.0);
  CHECK(ai.case_id == BoundCase::A_i);
  CHECK(ai.rho == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(std::exp(ai.ln_delta0_const) == doctest::Approx(27.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("case partition over the parameter grid") {
  for (int n = 1; n <= 10; ++n) {
    for (double beta : {-3.0, -1.0, 0.5, 1.0, 1.5, 2.5, 3.0, 5.0}) {
      const RhoDelta0 got = rho_delta0(n, beta);
      const CaseOracle want = case_oracle(n, beta);
      CHECK(got.case_id == want.case_id);
      CHECK(got.rho == doctest::Approx(want.rho).epsilon(1e-12));
      CHECK(std::exp(got.ln_delta0_const) ==
            doctest::Approx(want.delta0).epsilon(1e-10));
      // Exactly one of the sign tests fires.
      const double d = n - beta;
      const int fired = (d > 3.0 ? 1 : 0) + (d <= 1.0 ? 1 : 0) +
                        ((1.0 < d && d <= 3.0) ? 1 : 0);
      CHECK(fired == 1);
      CHECK(got.rho >= 1.0);
    }
  }
}

TEST_CASE("new constants") {
  const BoundConstants bc = new_constants(2, 1.0, 1.0, 1.0);
  CHECK(bc.case_id == BoundCase::B_ii);
  CHECK(bc.rho == doctest::Approx(1.0));
  CHECK(bc.c_big == doctest::Approx(8.0));
  CHECK(bc.delta0 == doctest::Approx(1.0 / 24.0));
  CHECK(std::exp(bc.ln_lambda_prime) ==
        doctest::Approx(std::pow(2.0 / 3.0, 1.0 / 24.0)).epsilon(1e-14));

  // lambda' is bitwise identical for n = 1..4 at beta = 1 (rho = 1 in all).
  const double lp1 = new_constants(1, 1.0, 1.0, 1.0).ln_lambda_prime;
  for (int n = 2; n <= 4; ++n) {
    CHECK(new_constants(n, 1.0, 1.0, 1.0).ln_lambda_prime == lp1);
  }
  CHECK(std::fabs(std::exp(lp1) - 0.983248) < 1e-6);

  // Small b0 switches the max branch: C = 2/(3 b0) = 16.
  const BoundConstants sb = new_constants(2, 1.0, 1.0, 1.0 / 24.0);
  CHECK(sb.c_big == doctest::Approx(16.0));
  CHECK(std::exp(sb.ln_lambda_prime) ==
        doctest::Approx(std::pow(2.0 / 3.0, 1.0 / 48.0)).epsilon(1e-14));

  // Equal rho implies equal lambda' at fixed b0.
  const BoundConstants x1 = new_constants(3, 1.0, 2.0, 1.0);   // case C, rho = 1
  const BoundConstants x2 = new_constants(2, -1.0, 0.5, 1.0);  // case C, rho = 1
  CHECK(x1.ln_lambda_prime == x2.ln_lambda_prime);

  for (int n = 1; n <= 10; ++n) {
    for (double beta : {-3.0, -1.0, 0.5, 1.0, 2.5}) {
      const BoundConstants v = new_constants(n, beta, 1.0, 1.0);
      CHECK(v.ln_lambda_prime < 0.0);
      CHECK(std::exp(v.ln_lambda_prime) < 1.0);
      CHECK(std::exp(v.ln_lambda_prime) > 0.0);
      CHECK(v.delta0 > 0.0);
      CHECK(v.delta0 < 1.0);
    }
  }
}

TEST_CASE("choose_degree") {
  CHECK(choose_degree(1.0 / 24.0, 8.0) == 1);
  CHECK(choose_degree(1.0 / 48.0, 8.0) == 2);
  CHECK(choose_degree(1.0 / 240.0, 8.0) == 10);
  CHECK_THROWS_AS(choose_degree(1.0 / 23.0, 8.0), std::domain_error);
  CHECK_THROWS_AS(choose_degree(0.0, 8.0), std::domain_error);

  // Rational property check in exact integer arithmetic: with C = 8 and
  // delta = a/b, the window test 1 <= 24 l a / b <= 2 is integral.
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t b = 24 + static_cast<std::int64_t>(rng() % 100000);
    const std::int64_t a_max = b / 24;
    const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % a_max);
    const long l = choose_degree(static_cast<double>(a) / static_cast<double>(b), 8.0);
    const std::int64_t lhs = 24 * static_cast<std::int64_t>(l) * a;
    CHECK(lhs >= b);
    CHECK(lhs <= 2 * b);
    // Smallest such l: the integer ceiling of b / (24 a).
    const std::int64_t smallest = (b + 24 * a - 1) / (24 * a);
    CHECK(static_cast<std::int64_t>(l) == smallest);
  }
}

TEST_CASE("coefficient bound ln_cl_upper") {
  // With c = 1, rho = 1, Delta0 = 1, the expression collapses to
  // (n+beta+1)/4 ln2 + (n+1)/4 ln pi + ln(n alpha_n)/2 + l ln 2.
  const int n = 3;
  const double beta = 1.0;  // (3, 1) is case C: rho = 1, Delta0 = 1
  for (long l : {2L, 5L, 9L}) {
    const double expect = 0.25 * (n + beta + 1) * std::log(2.0) +
                          0.25 * (n + 1) * std::log(M_PI) +
                          0.5 * (std::log(3.0) + mqbound::unit_ball_volume_ln(3)) +
                          l * std::log(2.0);
    CHECK(ln_cl_upper(n, beta, 1.0, l, 1.0, 0.0) ==
          doctest::Approx(expect).epsilon(1e-13));
  }
  // Increasing l by one adds exactly ln(2 rho).
  const double lo = ln_cl_upper(5, 1.0, 1.0, 4, 1.2, 0.3);
  const double hi = ln_cl_upper(5, 1.0, 1.0, 5, 1.2, 0.3);
  CHECK(hi - lo == doctest::Approx(std::log(2.4)).epsilon(1e-13));

  // Frozen against a 50-digit evaluation of the full product at
  // n=1, beta=1, c=1, l=2 (Delta0 = 1/4).
  const RhoDelta0 rd = rho_delta0(1, 1.0);
  CHECK(ln_cl_upper(1, 1.0, 1.0, 2, rd.rho, rd.ln_delta0_const) ==
        doctest::Approx(2.1319460991845776).epsilon(1e-10));

  CHECK_THROWS_AS(ln_cl_upper(1, 1.0, 1.0, 1, rd.rho, rd.ln_delta0_const),
                  std::domain_error);
}

TEST_CASE("certified bound ln_new_bound") {
  const BoundConstants bc = new_constants(2, 1.0, 1.0, 1.0);

  // Linearity in the seminorm.
  const double base = ln_new_bound(bc, bc.delta0 / 4.0, 1.0);
  CHECK(ln_new_bound(bc, bc.delta0 / 4.0, 2.0) - base ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // Halving delta doubles the lambda'-term's log contribution; isolate it
  // by cancelling the rest of the formula analytically.
  const double d1 = bc.delta0 / 4.0;
  const double d2 = d1 / 2.0;
  const long l1 = choose_degree(d1, bc.c_big);
  const long l2 = choose_degree(d2, bc.c_big);
  const double lhs = ln_new_bound(bc, d2, 1.0) - ln_new_bound(bc, d1, 1.0);
  const double expect = (1.0 / d2 - 1.0 / d1) * bc.ln_lambda_prime +
                        0.5 * std::log(d2 / d1) -
                        (l2 - l1) * std::log(bc.c);
  CHECK(lhs == doctest::Approx(expect).epsilon(1e-12));

  // Frozen against a 50-digit evaluation at delta = delta0 / 4, seminorm 1.
  CHECK(base == doctest::Approx(-2.4961809694454702).epsilon(1e-10));

  // Zero seminorm: log-space zero.
  CHECK(std::isinf(ln_new_bound(bc, bc.delta0 / 4.0, 0.0)));
  CHECK(ln_new_bound(bc, bc.delta0 / 4.0, 0.0) < 0.0);

  // delta = delta0 selects l = 1 = m: too coarse for this kernel order.
  CHECK_THROWS_AS(ln_new_bound(bc, bc.delta0, 1.0), std::domain_error);
  // Out-of-range delta.
  CHECK_THROWS_AS(ln_new_bound(bc, bc.delta0 * 1.5, 1.0), std::domain_error);
  // An order-zero kernel certifies down to l = 1.
  const BoundConstants imq = new_constants(1, -1.0, 1.0, 1.0);
  CHECK_NOTHROW(ln_new_bound(imq, imq.delta0, 1.0));
}

TEST_CASE("gamma recursion") {
  CHECK(gamma_seq(1) == 2);
  CHECK(gamma_seq(2) == 12);
  CHECK(gamma_seq(3) == 78);
  CHECK(gamma_seq(4) == 632);
  CHECK(gamma_seq(5) == 6330);
  for (int n = 2; n <= 16; ++n) {
    CHECK(gamma_seq(n) == 2LL * n * (1 + gamma_seq(n - 1)));
  }
  CHECK_THROWS_AS(gamma_seq(17), std::overflow_error);
}

TEST_CASE("old bound constants stay in log space") {
  // n = 1 with the exponential branch active: ln C = ln(2 rho') + 2*1*2.
  const OldBoundConstants o1 = old_constants(1, 1.0, 1.0, 1.0, 1.0);
  CHECK(o1.gamma_n == 2);
  CHECK(o1.ln_c_old == doctest::Approx(std::log(2.0) + 4.0).epsilon(1e-13));

  // n = 3: C_old >= e^{468}, so |ln lambda| < 1e-60 while the value is
  // still representable; test-side arithmetic reproduces the magnitude.
  const OldBoundConstants o3 = old_constants(3, 1.0, 1.0, 1.0, 1.0);
  CHECK(o3.gamma_n == 78);
  const double expect_ln_c = std::log(2.0 * std::sqrt(3.0)) + 2.0 * 3.0 * 78.0;
  CHECK(o3.ln_c_old == doctest::Approx(expect_ln_c).epsilon(1e-13));
  const double expect_mag =
      std::log(std::log(1.5)) - std::log(3.0) - std::log(78.0) - expect_ln_c;
  CHECK(o3.ln_abs_ln_lambda_old == doctest::Approx(expect_mag).epsilon(1e-12));
  CHECK(o3.ln_abs_ln_lambda_old < std::log(1e-60));
  CHECK(o3.ln_lambda_old < 0.0);
  CHECK(std::fabs(o3.ln_lambda_old) < 1e-60);

  // n = 5: |ln lambda| underflows the linear field but not the log one.
  const OldBoundConstants o5 = old_constants(5, 1.0, 1.0, 1.0, 1.0);
  CHECK(o5.ln_lambda_old == 0.0);
  CHECK(std::signbit(o5.ln_lambda_old));
  CHECK(o5.ln_abs_ln_lambda_old == doctest::Approx(-63312.252254).epsilon(1e-9));

  // Tiny b0 can activate the other branch at n = 1.
  const OldBoundConstants ob = old_constants(1, 1.0, 1.0, 1e-30, 1.0);
  CHECK(ob.ln_c_old == doctest::Approx(std::log(2.0 / 3.0) + 30.0 * std::log(10.0))
                           .epsilon(1e-10));
}

TEST_CASE("moment inequality sweeps") {
  struct Inst {
    int n;
    double beta;
    BoundCase expect;
  };
  for (const Inst inst : {Inst{4, -1.0, BoundCase::A_i}, Inst{5, 1.0, BoundCase::A_ii},
                          Inst{1, 1.0, BoundCase::B_ii}, Inst{3, 1.0, BoundCase::C}}) {
    CHECK(rho_delta0(inst.n, inst.beta).case_id == inst.expect);
    const auto report = verify_moment_lemma(inst.n, inst.beta, 60);
    const int m = mqbound::cpd_order(inst.beta);
    CHECK(report.front().l == 2 * m + 2);
    CHECK(report.back().l == 60);
    for (const auto& row : report) {
      CHECK(row.slack >= -1e-9);
    }
  }
  CHECK_THROWS_AS(verify_moment_lemma(3, 1.0, 2), std::domain_error);
}

TEST_CASE("factorial inequality sweep") {
  const auto report = verify_factorial_lemma(300);
  REQUIRE(report.size() == 300);
  for (const auto& row : report) CHECK(row.slack >= -1e-12);
  // l = 1: sqrt(2) <= 2, slack = ln 2 / 2.
  CHECK(report[0].slack == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  // l = 10 value against the summation oracle.
  double ln20f = 0.0, ln10f = 0.0;
  for (int k = 2; k <= 20; ++k) ln20f += std::log(static_cast<double>(k));
  for (int k = 2; k <= 10; ++k) ln10f += std::log(static_cast<double>(k));
  const double lhs10 = 0.5 * ln20f - ln10f;
  CHECK(lhs10 == doctest::Approx(6.063396).epsilon(1e-6));
  CHECK(report[9].slack == doctest::Approx(10.0 * std::log(2.0) - lhs10).epsilon(1e-10));
}

TEST_CASE("decay comparison") {
  const BoundConstants bc = new_constants(2, 1.0, 1.0, 1.0);
  const auto rows = compare_bounds(2, 1.0, 1.0, 1.0, {bc.delta0, bc.delta0 / 8.0});
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.new_decay < 0.0);
    CHECK(r.old_decay <= 0.0);
    CHECK(std::signbit(r.old_decay));
    CHECK(r.ratio_old_over_new < 1e-10);
  }
  // At delta = delta0 the decay exponent is exactly ln(2/3).
  CHECK(rows[0].new_decay == doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(compare_bounds(2, 1.0, 1.0, 1.0, {1.0}), std::domain_error);
}

TEST_CASE("the certified bound dominates the sharp proof-stage value") {
  // Inequality chain: coefficient bound times (l delta)^l times the measure
  // total-variation bound is below the final certified value, for the
  // degree selected by the delta window.  The binomial C(2l-3, l-1) is 1 at
  // l = 1 (degree-0 measure).
  for (const auto& [n, beta] : std::vector<std::pair<int, double>>{
           {2, 1.0}, {1, 1.0}, {3, 1.0}, {5, 1.0}, {1, -1.0}, {4, -1.0}, {10, 2.5}}) {
    const BoundConstants bc = new_constants(n, beta, 1.0, 1.0);
    const int m = mqbound::cpd_order(beta);
    for (int k = 1; k <= 50; ++k) {
      const double delta = bc.delta0 / k;
      const long l = choose_degree(delta, bc.c_big);
      if (l <= m) continue;
      const double ln_tv =
          l >= 2 ? mqbound::ln_binomial(2 * l - 3, l - 1) : 0.0;
      const double sharp = ln_cl_upper(n, beta, bc.c, l, bc.rho, bc.ln_delta0_const) +
                           l * std::log(l * delta) + ln_tv;
      const double certified = ln_new_bound(bc, delta, 1.0);
      CHECK(sharp <= certified + 1e-9);
    }
  }
}
