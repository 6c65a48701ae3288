#include "riesz/quadrature.hpp"

#include <array>
#include <memory>

namespace riesz::quad {

namespace {
constexpr int kMaxLevels = 4;

void check_level(int level) {
  if (level < 0 || level >= kMaxLevels) {
    throw NumericError("quadrature nested deeper than supported");
  }
}
}  // namespace

boost::math::quadrature::tanh_sinh<double>& finite_rule(int level) {
  check_level(level);
  thread_local std::array<std::unique_ptr<boost::math::quadrature::tanh_sinh<double>>, kMaxLevels> rules;
  auto& rule = rules[level];
  if (!rule) rule = std::make_unique<boost::math::quadrature::tanh_sinh<double>>(15);
  return *rule;
}

boost::math::quadrature::exp_sinh<double>& half_line_rule(int level) {
  check_level(level);
  thread_local std::array<std::unique_ptr<boost::math::quadrature::exp_sinh<double>>, kMaxLevels> rules;
  auto& rule = rules[level];
  if (!rule) rule = std::make_unique<boost::math::quadrature::exp_sinh<double>>(12);
  return *rule;
}

}  // namespace riesz::quad
