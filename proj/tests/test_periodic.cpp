#include <doctest.h>

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "riesz/errors.hpp"
#include "riesz/periodic.hpp"

using namespace riesz;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLatticeLogW = -2.0 * kPi * std::log(2.0 * kPi);

}  // namespace

TEST_CASE("log self-energy from the closed-form Green function") {
  const KernelSpec log = make_kernel(KernelCase::kLog1d, 1);
  CHECK(renormalized_self_energy_1d(1, log) == Approx(kLatticeLogW).epsilon(1e-9));
  // lim G - g/c = -(1/2 pi) log(2 pi / N).
  CHECK(renormalized_self_energy_1d(4, log) ==
        Approx(-2.0 * kPi * std::log(2.0 * kPi / 4.0)).epsilon(1e-9));
}

TEST_CASE("Riesz self-energy is the continued lattice sum") {
  for (double s : {0.25, 0.5, 0.75}) {
    const KernelSpec spec = make_kernel(KernelCase::kRiesz, 1, s);
    CHECK(renormalized_self_energy_1d(1, spec) ==
          Approx(2.0 * boost::math::zeta(s) * spec.c_ds).epsilon(1e-8));
  }
}

TEST_CASE("lattice energy is independent of the period") {
  const KernelSpec log = make_kernel(KernelCase::kLog1d, 1);
  const KernelSpec riesz = make_kernel(KernelCase::kRiesz, 1, 0.5);
  const double riesz_one = periodic_W(lattice_torus(1), riesz).W_value;
  for (int N : {1, 2, 4, 7}) {
    const LatticeEnergyReport r = periodic_W(lattice_torus(N), log);
    CHECK(r.W_value == Approx(kLatticeLogW).epsilon(1e-9));
    REQUIRE(r.xi.has_value());
    CHECK(*r.xi == Approx(-std::log(2.0 * kPi)).epsilon(1e-9));
    CHECK(periodic_W(lattice_torus(N), riesz).W_value == Approx(riesz_one).epsilon(1e-8));
  }
  CHECK(periodic_W(lattice_torus(1), log).pair_term == 0.0);
}

TEST_CASE("collisions and clustering") {
  const KernelSpec log = make_kernel(KernelCase::kLog1d, 1);
  TorusConfig bad{1, 2.0, {0.5, 0.5}};
  CHECK(periodic_W(bad, log).W_value == std::numeric_limits<double>::infinity());
  TorusConfig wrapped{1, 2.0, {0.0, 2.0}};
  CHECK(periodic_W(wrapped, log).W_value == std::numeric_limits<double>::infinity());

  TorusConfig even{1, 2.0, {0.0, 1.0}};
  TorusConfig clustered{1, 2.0, {0.0, 0.3}};
  CHECK(periodic_W(even, log).W_value < periodic_W(clustered, log).W_value);

  CHECK_THROWS_AS(periodic_W(TorusConfig{1, 3.0, {0.0, 1.0}}, log), DomainError);
  CHECK_THROWS_AS(periodic_W(TorusConfig{2, 2.0, {0.0, 0.0, 0.5, 0.5}}, log), DomainError);
}

TEST_CASE("periodic pair gradient against central differences") {
  for (const KernelSpec& spec :
       {make_kernel(KernelCase::kLog1d, 1), make_kernel(KernelCase::kRiesz, 1, 0.4)}) {
    TorusConfig c{1, 5.0, {0.1, 0.9, 2.3, 3.0, 4.6}};
    std::vector<double> grad;
    periodic_pair_energy(c, spec, &grad);
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      const double h = 1e-6;
      TorusConfig up = c;
      TorusConfig down = c;
      up.points[k] += h;
      down.points[k] -= h;
      const double fd =
          (periodic_pair_energy(up, spec) - periodic_pair_energy(down, spec)) / (2.0 * h);
      CHECK(grad[k] == Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("truncated energy on the lattice") {
  // Smearing each charge on a circle of radius eta in the extended plane
  // shifts the lattice energy by exactly 8 pi eta.
  const KernelSpec log = make_kernel(KernelCase::kLog1d, 1);
  const TorusConfig lattice = lattice_torus(4);
  const double W = periodic_W(lattice, log).W_value;
  for (double eta : {0.2, 0.1, 0.05, 0.02, 1e-3}) {
    const LatticeEnergyReport r = truncated_periodic_energy(lattice, log, eta);
    CHECK(r.eta.value() == eta);
    CHECK(r.W_value - W == Approx(8.0 * kPi * eta).epsilon(1e-9));
  }
  CHECK_THROWS_AS(truncated_periodic_energy(lattice, log, 0.5), DomainError);
  CHECK_THROWS_AS(truncated_periodic_energy(lattice, make_kernel(KernelCase::kRiesz, 1, 0.5), 0.1),
                  DomainError);
}

TEST_CASE("truncated energy of an irregular configuration") {
  const KernelSpec log = make_kernel(KernelCase::kLog1d, 1);
  const TorusConfig c{1, 3.0, {0.2, 1.1, 2.4}};
  const double W = periodic_W(c, log).W_value;
  const double a = truncated_periodic_energy(c, log, 0.02).W_value;
  const double b = truncated_periodic_energy(c, log, 0.01).W_value;
  CHECK(a > b);
  CHECK(b > W);
  CHECK(b - W == Approx(0.5 * (a - W)).epsilon(1e-3));
}

TEST_CASE("scaling laws") {
  const KernelSpec log = make_kernel(KernelCase::kLog1d, 1);
  const KernelSpec riesz = make_kernel(KernelCase::kRiesz, 1, 0.5);
  CHECK(scale_W(-3.2, 1.0, log) == Approx(-3.2).epsilon(1e-15));
  CHECK(scale_W(-3.2, 1.0, riesz) == Approx(-3.2).epsilon(1e-15));
  CHECK(scale_W(0.0, std::numbers::e, log) == Approx(-2.0 * kPi * std::numbers::e).epsilon(1e-14));
  CHECK(scale_W(2.0, 4.0, riesz) == Approx(2.0 * std::pow(4.0, 1.5)).epsilon(1e-14));
  for (double m : {0.1, 1.0, std::numbers::e, 10.0}) {
    for (const KernelSpec& spec : {log, riesz}) {
      CHECK(unscale_W(scale_W(1.7, m, spec), m, spec) == Approx(1.7).epsilon(1e-12));
    }
  }
  CHECK(rescaled_eta(0.1, 4.0, 1) == Approx(0.4));
  CHECK(rescaled_eta(0.1, 4.0, 2) == Approx(0.2));
  CHECK_THROWS_AS(scale_W(1.0, 0.0, log), DomainError);
}
