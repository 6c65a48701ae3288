#include "riesz/epstein.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// Lattice vectors with |q|^2 above this bound contribute below 1e-18 to
// the incomplete-gamma series (e^{-pi |q|^2}).
constexpr double kThetaCutoff = 14.0;

void require_lattice(Lattice2D lat) {
  if (!(lat.y > 0.0) || !std::isfinite(lat.x) || !std::isfinite(lat.y)) {
    throw DomainError("lattice parameter tau must lie in the upper half-plane");
  }
}

// Upper incomplete gamma for any real a, via the downward recurrence
// Gamma(a, z) = (Gamma(a + 1, z) - z^a e^{-z}) / a when a < 0.
double upper_gamma(double a, double z) {
  if (a > 0.0) return boost::math::tgamma(a, z);
  if (a == 0.0) return boost::math::expint(1, z);
  return (upper_gamma(a + 1.0, z) - std::pow(z, a) * std::exp(-z)) / a;
}

// phi_a(z) = int_1^inf t^{a-1} e^{-zt} dt
double phi(double a, double z) { return std::pow(z, -a) * upper_gamma(a, z); }

// Calls f(|q|^2) for every nonzero q with |q|^2 <= bound.
template <typename F>
void for_each_short_vector(Lattice2D lat, double bound, F&& f) {
  const auto m_max = static_cast<long>(std::floor(std::sqrt(bound / lat.y)));
  for (long m = -m_max; m <= m_max; ++m) {
    const double center = -m * lat.x;
    const double half = std::sqrt(std::max(0.0, bound * lat.y - (m * lat.y) * (m * lat.y)));
    const auto n_lo = static_cast<long>(std::ceil(center - half));
    const auto n_hi = static_cast<long>(std::floor(center + half));
    for (long n = n_lo; n <= n_hi; ++n) {
      if (m == 0 && n == 0) continue;
      const double re = m * lat.x + n;
      const double im = m * lat.y;
      const double q2 = (re * re + im * im) / lat.y;
      if (q2 <= bound) f(q2);
    }
  }
}

// Modular part of the Chowla-Selberg expansion,
// sum_r r^{alpha - 1/2} sigma_{1 - 2 alpha}(r) K_{alpha - 1/2}(2 pi r y) cos(2 pi r x),
// stopped once the Bessel factor drops below 1e-16.
double cs_series(Lattice2D lat, double alpha) {
  const double nu = std::abs(alpha - 0.5);
  double sum = 0.0;
  for (long r = 1;; ++r) {
    const double k = specfun::bessel_k(nu, 2.0 * kPi * r * lat.y);
    const double term = std::pow(static_cast<double>(r), alpha - 0.5) *
                        specfun::sigma_div(1.0 - 2.0 * alpha, r) * k *
                        std::cos(2.0 * kPi * r * lat.x);
    sum += term;
    if (k < 1e-16 || r > 10000) break;
  }
  return sum;
}

// Q-series at alpha = 1: 4 pi sum_r sigma_{-1}(r) e^{-2 pi r y} cos(2 pi r x).
double log_series(Lattice2D lat) {
  double sum = 0.0;
  for (long r = 1;; ++r) {
    const double e = std::exp(-2.0 * kPi * r * lat.y);
    sum += specfun::sigma_div(-1.0, r) * e * std::cos(2.0 * kPi * r * lat.x);
    if (e < 1e-17) break;
  }
  return 4.0 * kPi * sum;
}

// Finite, tau-dependent part of Z_tau(alpha) at alpha = 1; the constant
// and the pole are common to all lattices.
double log_lattice_part(Lattice2D lat) {
  return kPi * kPi / 3.0 * lat.y - kPi * std::log(lat.y) + log_series(lat);
}

}  // namespace

Lattice2D square_lattice() { return {0.0, 1.0}; }

Lattice2D triangular_lattice() { return {0.5, std::sqrt(3.0) / 2.0}; }

Lattice2D canonicalize(Lattice2D lat) {
  require_lattice(lat);
  for (int iter = 0; iter < 1000; ++iter) {
    lat.x -= std::round(lat.x);
    const double r2 = lat.x * lat.x + lat.y * lat.y;
    if (r2 >= 1.0) break;
    // tau -> -1 / tau
    lat.x = -lat.x / r2;
    lat.y = lat.y / r2;
  }
  if (lat.x == -0.5) lat.x = 0.5;
  return lat;
}

double epstein_zeta_theta(Lattice2D lat, double alpha) {
  require_lattice(lat);
  if (alpha == 0.0 || alpha == 1.0) {
    throw DomainError("Epstein zeta has no finite value at alpha = " + std::to_string(alpha));
  }
  // The dual of a unit-covolume planar lattice is its rotation by 90
  // degrees, so both halves of the split run over the same norms.
  double sum = 0.0;
  for_each_short_vector(lat, kThetaCutoff, [&](double q2) {
    const double z = kPi * q2;
    sum += phi(alpha, z) + phi(1.0 - alpha, z);
  });
  return std::pow(kPi, alpha) / specfun::gamma_fn(alpha) *
         (sum + 1.0 / (alpha - 1.0) - 1.0 / alpha);
}

double epstein_zeta_direct(Lattice2D lat, double alpha) {
  if (!(alpha > 1.0)) {
    throw DomainError("epstein_zeta_direct requires alpha > 1; use epstein_zeta_cs");
  }
  return epstein_zeta_theta(lat, alpha);
}

double epstein_zeta_cs(Lattice2D lat, double alpha) {
  require_lattice(lat);
  if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-9) {
    throw DomainError("epstein_zeta_cs requires alpha in (0, 1) or (1, inf), got " +
                      std::to_string(alpha));
  }
  const double y = lat.y;
  if (std::abs(alpha - 0.5) < 1e-8) {
    return 2.0 * std::sqrt(y) * (std::log(y) + kEulerGamma - std::log(4.0 * kPi)) +
           8.0 * std::sqrt(y) * cs_series(lat, 0.5);
  }
  using specfun::gamma_fn;
  using specfun::riemann_zeta;
  const double ga = gamma_fn(alpha);
  return 2.0 * std::pow(y, alpha) * riemann_zeta(2.0 * alpha) +
         2.0 * std::pow(y, 1.0 - alpha) * std::sqrt(kPi) * gamma_fn(alpha - 0.5) / ga *
             riemann_zeta(2.0 * alpha - 1.0) +
         8.0 * std::pow(kPi, alpha) * std::sqrt(y) / ga * cs_series(lat, alpha);
}

double relative_lattice_W(Lattice2D lat, const KernelSpec& spec) {
  if (spec.d != 2) throw DomainError("relative_lattice_W needs a d = 2 kernel");
  require_lattice(lat);
  const Lattice2D tri = triangular_lattice();
  const double scale = spec.c_ds * spec.c_ds / std::pow(2.0 * kPi, 2.0 * spec.alpha);
  if (spec.alpha == 1.0) return scale * (log_lattice_part(lat) - log_lattice_part(tri));
  return scale * (epstein_zeta_cs(lat, spec.alpha) - epstein_zeta_cs(tri, spec.alpha));
}

ScanResult scan_fundamental_domain(const KernelSpec& spec, int resolution) {
  if (spec.d != 2) throw DomainError("lattice scan needs a d = 2 kernel");
  if (resolution < 16) throw DomainError("scan resolution must be at least 16");
  ScanResult out;
  out.resolution = resolution;
  const auto res = static_cast<std::size_t>(resolution);
  out.cells.resize(res * res);
  parallel_for(res, [&](std::size_t i) {
    const double x = -0.5 + static_cast<double>(i + 1) / resolution;
    const double y0 = std::sqrt(1.0 - x * x);
    for (std::size_t j = 0; j < res; ++j) {
      const double t = static_cast<double>(j) / (resolution - 1);
      const double y = y0 + t * (3.0 - y0);
      out.cells[i * res + j] = {x, y, relative_lattice_W({x, y}, spec)};
    }
  });
  std::size_t best = 0;
  for (std::size_t c = 1; c < out.cells.size(); ++c) {
    if (out.cells[c].value < out.cells[best].value) best = c;
  }
  out.argmin = {out.cells[best].x, out.cells[best].y};
  out.min_value = out.cells[best].value;
  return out;
}

}  // namespace riesz
