#pragma once

#include <stdexcept>
#include <string>

namespace mqbound {

// Runtime numeric failures (as opposed to bad arguments, which use
// std::domain_error / std::invalid_argument).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// A finite result would exceed double range.
class OverflowError : public NumericError {
 public:
  explicit OverflowError(const std::string& msg) : NumericError(msg) {}
};

// A linear solve was refused because the pivot spread indicates the
// system is numerically singular.
class ConditioningError : public NumericError {
 public:
  ConditioningError(const std::string& msg, double diagnostic)
      : NumericError(msg), diagnostic_(diagnostic) {}
  double diagnostic() const { return diagnostic_; }

 private:
  double diagnostic_;
};

}  // namespace mqbound
