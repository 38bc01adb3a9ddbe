#pragma once

#include <cmath>

#include "mqbound/errors.hpp"

namespace mqbound {

// A real number stored as (sign, ln|value|).  Products, quotients and powers
// act on the log part, so quantities like (2l)! or e^{2n*gamma_n} compose
// without ever being materialized linearly.
class SignedLog {
 public:
  constexpr SignedLog() : sign_(0), ln_abs_(0.0) {}

  static SignedLog from_value(double v) {
    if (v == 0.0) return SignedLog();
    return SignedLog(v > 0.0 ? 1 : -1, std::log(std::fabs(v)));
  }

  static SignedLog from_parts(int sign, double ln_abs) {
    if (sign == 0) return SignedLog();
    return SignedLog(sign > 0 ? 1 : -1, ln_abs);
  }

  // base^exponent for base > 0.
  static SignedLog pow_of(double base, double exponent) {
    if (base <= 0.0) throw std::domain_error("SignedLog::pow_of: base must be positive");
    return SignedLog(1, exponent * std::log(base));
  }

  int sign() const { return sign_; }
  double ln_abs() const { return ln_abs_; }
  bool is_zero() const { return sign_ == 0; }

  SignedLog operator*(const SignedLog& o) const {
    if (is_zero() || o.is_zero()) return SignedLog();
    return SignedLog(sign_ * o.sign_, ln_abs_ + o.ln_abs_);
  }

  SignedLog operator/(const SignedLog& o) const {
    if (o.is_zero()) throw std::domain_error("SignedLog: division by zero");
    if (is_zero()) return SignedLog();
    return SignedLog(sign_ * o.sign_, ln_abs_ - o.ln_abs_);
  }

  SignedLog pow_int(long k) const {
    if (is_zero()) {
      if (k <= 0) throw std::domain_error("SignedLog: 0 to a nonpositive power");
      return SignedLog();
    }
    const int s = (sign_ < 0 && (k % 2 != 0)) ? -1 : 1;
    return SignedLog(s, ln_abs_ * static_cast<double>(k));
  }

  // May return +-inf / 0 when out of double range.
  double value() const {
    if (is_zero()) return 0.0;
    return static_cast<double>(sign_) * std::exp(ln_abs_);
  }

  // Throws instead of silently saturating to infinity.
  double value_checked() const {
    if (is_zero()) return 0.0;
    const double v = value();
    if (std::isinf(v)) {
      throw OverflowError("SignedLog: value exceeds double range (ln|v| = " +
                          std::to_string(ln_abs_) + ")");
    }
    return v;
  }

 private:
  SignedLog(int sign, double ln_abs) : sign_(sign), ln_abs_(ln_abs) {}

  int sign_;
  double ln_abs_;
};

}  // namespace mqbound
