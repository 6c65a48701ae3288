#pragma once

// Thin adapters over Boost.Math double-exponential quadrature. Both rules
// tolerate integrable endpoint singularities, which is what every integral
// in this library needs (log and power singularities at a support edge or
// at a split point).

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "riesz/errors.hpp"

namespace riesz::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Rules are per thread and per nesting level, so an integrand may itself
// call integrate() without re-entering the rule it is evaluated by.
boost::math::quadrature::tanh_sinh<double>& finite_rule(int level);
boost::math::quadrature::exp_sinh<double>& half_line_rule(int level);

namespace detail {
inline thread_local int nesting = 0;
struct NestingGuard {
  int level;
  NestingGuard() : level(nesting++) {}
  ~NestingGuard() { --nesting; }
  NestingGuard(const NestingGuard&) = delete;
  NestingGuard& operator=(const NestingGuard&) = delete;
};
}  // namespace detail

/// Integral over [a, b]; throws NumericError when the error estimate
/// exceeds `max_error` (defaults to no check).
template <typename F>
Estimate integrate(F&& f, double a, double b, double tol = 1e-12,
                   double max_error = std::numeric_limits<double>::infinity()) {
  Estimate est;
  if (a == b) return est;
  double l1 = 0.0;
  detail::NestingGuard guard;
  est.value = finite_rule(guard.level).integrate(f, a, b, tol, &est.error, &l1);
  if (!(est.error <= max_error)) {
    throw NumericError("quadrature on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "] did not converge",
                       est.error);
  }
  return est;
}

/// Integral over [a, +inf).
template <typename F>
Estimate integrate_to_infinity(F&& f, double a, double tol = 1e-12,
                               double max_error = std::numeric_limits<double>::infinity()) {
  Estimate est;
  double l1 = 0.0;
  detail::NestingGuard guard;
  est.value = half_line_rule(guard.level).integrate(
      [&](double t) { return f(t); }, a, std::numeric_limits<double>::infinity(),
      tol, &est.error, &l1);
  if (!(est.error <= max_error)) {
    throw NumericError("half-line quadrature did not converge", est.error);
  }
  return est;
}

}  // namespace riesz::quad
