#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

using namespace riesz;
using doctest::Approx;

TEST_CASE("gamma_fn classical values") {
  CHECK(specfun::gamma_fn(0.5) == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(specfun::gamma_fn(1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(specfun::gamma_fn(5.0) == Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma_fn(-2.0), DomainError);
}

TEST_CASE("gamma_fn against Boost") {
  for (double x : {-2.5, -0.3, 0.01, 0.7, 1.9, 3.3, 11.25, 30.5}) {
    CHECK(specfun::gamma_fn(x) == Approx(boost::math::tgamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("riemann_zeta classical values") {
  const double pi = std::numbers::pi;
  CHECK(specfun::riemann_zeta(2.0) == Approx(pi * pi / 6.0).epsilon(1e-14));
  CHECK(specfun::riemann_zeta(-1.0) == Approx(-1.0 / 12.0).epsilon(1e-13));
  CHECK(specfun::riemann_zeta(0.0) == Approx(-0.5).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::riemann_zeta(1.0), DomainError);
}

TEST_CASE("riemann_zeta against Boost across both branches") {
  for (double x : {-7.5, -3.0, -0.6, -0.5, -2e-6, 0.25, 0.5, 0.9, 1.01, 1.3, 2.5, 7.0, 40.0}) {
    CHECK(specfun::riemann_zeta(x) == Approx(boost::math::zeta(x)).epsilon(1e-12));
  }
}

TEST_CASE("riemann_zeta next to the pole") {
  for (double eps : {1e-3, 1e-6, -1e-6, 1e-9, -1e-9}) {
    CHECK(specfun::riemann_zeta(1.0 + eps) == Approx(boost::math::zeta(1.0 + eps)).epsilon(1e-10));
  }
}

TEST_CASE("bessel_k closed form and symmetry") {
  const double z = 1.0;
  const double expect = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z);
  CHECK(specfun::bessel_k(0.5, z) == Approx(expect).epsilon(1e-13));
  CHECK(specfun::bessel_k(0.3, 1.7) == Approx(specfun::bessel_k(-0.3, 1.7)).epsilon(1e-15));
  CHECK_THROWS_AS(specfun::bessel_k(0.0, 0.0), DomainError);
}

TEST_CASE("bessel_k(0, 5) against the defining integral") {
  boost::math::quadrature::exp_sinh<double> rule;
  const double oracle =
      rule.integrate([](double t) { return std::exp(-5.0 * std::cosh(t)); }, 0.0,
                     std::numeric_limits<double>::infinity());
  CHECK(specfun::bessel_k(0.0, 5.0) == Approx(oracle).epsilon(1e-12));
}

TEST_CASE("bessel_k against Boost, including the large-argument branch") {
  for (double nu : {0.0, 0.25, 1.0, 2.5}) {
    for (double z : {0.05, 0.8, 4.0, 25.0, 39.0, 41.0, 80.0}) {
      CHECK(specfun::bessel_k(nu, z) ==
            Approx(boost::math::cyl_bessel_k(nu, z)).epsilon(1e-11));
    }
  }
}

TEST_CASE("sigma_div") {
  CHECK(specfun::sigma_div(0.0, 6) == Approx(4.0));
  CHECK(specfun::sigma_div(1.0, 6) == Approx(12.0));
  CHECK(specfun::sigma_div(-1.0, 6) == Approx(2.0));
  CHECK(specfun::sigma_div(2.0, 1) == Approx(1.0));
  CHECK(specfun::sigma_div(0.5, 9) == Approx(1.0 + std::sqrt(3.0) + 3.0));
}
