#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Raised when arguments fall outside the admissible parameter range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure fails to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  explicit NumericError(const std::string& what)
      : NumericError(what, 0.0) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace riesz
