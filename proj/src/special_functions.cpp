#include "mqbound/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mqbound {

SignedLog gamma_signed(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    throw std::domain_error("gamma_signed: pole at nonpositive integer x = " +
                            std::to_string(x));
  }
  // std::lgamma returns ln|Gamma(x)| for every non-pole argument; only the
  // sign is left to reconstruct.  Gamma is positive on (0, inf) and changes
  // sign between consecutive negative integers: negative on (-1, 0),
  // positive on (-2, -1), and so on.
  int sign = 1;
  if (x < 0.0) {
    const long long k = static_cast<long long>(std::floor(x));
    sign = (k % 2 == 0) ? 1 : -1;
  }
  return SignedLog::from_parts(sign, std::lgamma(x));
}

double ln_factorial(long l) {
  if (l < 0) throw std::domain_error("ln_factorial: negative argument");
  return std::lgamma(static_cast<double>(l) + 1.0);
}

double ln_binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) {
    throw std::domain_error("ln_binomial: need 0 <= b <= a, got a=" +
                            std::to_string(a) + " b=" + std::to_string(b));
  }
  return ln_factorial(a) - ln_factorial(b) - ln_factorial(a - b);
}

double unit_ball_volume_ln(int n) {
  if (n < 1) throw std::domain_error("unit_ball_volume_ln: n must be >= 1");
  const double half_n = 0.5 * static_cast<double>(n);
  return half_n * std::log(M_PI) - std::lgamma(half_n + 1.0);
}

}  // namespace mqbound
