#include "mqbound/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mqbound/special_functions.hpp"

namespace mqbound {

int cpd_order(double beta) {
  if (beta >= 0.0 && beta == std::floor(beta) && std::fmod(beta, 2.0) == 0.0) {
    throw std::domain_error("cpd_order: beta = " + std::to_string(beta) +
                            " is a nonnegative even integer (Gamma pole)");
  }
  if (beta < 0.0) return 0;
  return static_cast<int>(std::ceil(beta / 2.0));
}

KernelParams::KernelParams(double beta, double c)
    : beta_(beta), c_(c), c2_(c * c), order_(cpd_order(beta)),
      gamma_prefactor_(gamma_signed(-beta / 2.0)) {
  if (!(c > 0.0)) throw std::invalid_argument("KernelParams: c must be positive");
}

double KernelParams::evaluate_r2(double r2) const {
  if (r2 < 0.0) throw std::domain_error("KernelParams::evaluate_r2: negative r2");
  const SignedLog radial = SignedLog::pow_of(c2_ + r2, beta_ / 2.0);
  return (gamma_prefactor_ * radial).value_checked();
}

}  // namespace mqbound
