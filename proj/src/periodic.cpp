#include "riesz/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "riesz/errors.hpp"
#include "riesz/green1d.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoincidence = 1e-12;

void require_1d(const TorusConfig& config, const KernelSpec& spec) {
  if (config.d != 1 || spec.d != 1) {
    throw DomainError(
        "periodic energies of planar cells are not supported; use relative_lattice_W "
        "for planar lattices");
  }
  if (config.points.empty()) throw DomainError("torus configuration has no points");
  const double n = static_cast<double>(config.size());
  if (std::abs(config.length - n) > 1e-9 * n) {
    throw DomainError("torus length must equal the number of points (unit density)");
  }
}

int period_of(const TorusConfig& config) { return static_cast<int>(config.size()); }

// Signed representative of x modulo N in [-N/2, N/2).
double wrap(double x, double N) { return x - N * std::floor(x / N + 0.5); }

double min_circular_spacing(const TorusConfig& config) {
  const double N = config.length;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      best = std::min(best, std::abs(wrap(config.points[i] - config.points[j], N)));
    }
  }
  return best;
}

// Extension of the log1d torus Green function off the line,
// -(1/2 pi) log |1 - exp(2 pi i (x + i|y|) / N)|.
double extended_log_green(int N, double x, double y) {
  const double w = std::exp(-2.0 * kPi * std::abs(y) / N);
  const double s = std::sin(kPi * x / N);
  const double om = -std::expm1(-2.0 * kPi * std::abs(y) / N);
  return -std::log(om * om + 4.0 * w * s * s) / (4.0 * kPi);
}

// Average of the extended Green function over the circle of radius eta
// centred at (x, 0). The function is even in y and has a kink across the
// line y = 0 (where the background sits), so the average is taken over
// the upper half circle with 64-point Gauss-Legendre.
double circle_average(int N, double x, double eta) {
  auto f = [=](double theta) {
    return extended_log_green(N, x + eta * std::cos(theta), eta * std::sin(theta));
  };
  return boost::math::quadrature::gauss<double, 64>::integrate(f, 0.0, kPi) / kPi;
}

}  // namespace

TorusConfig lattice_torus(int N) {
  if (N < 1) throw DomainError("lattice torus needs N >= 1");
  TorusConfig config;
  config.d = 1;
  config.length = N;
  for (int i = 0; i < N; ++i) config.points.push_back(i);
  return config;
}

double torus_green(const KernelSpec& spec, int N, double x) {
  if (spec.is_log()) return green_1d_log(N, x);
  return green_1d_integral(N, spec.alpha, x);
}

double torus_green_derivative(const KernelSpec& spec, int N, double x) {
  if (spec.is_log()) {
    const double r = wrap(x, N);
    return -1.0 / (2.0 * N * std::tan(kPi * r / N));
  }
  return green_1d_derivative(N, spec.alpha, x);
}

double renormalized_self_energy_1d(int N, const KernelSpec& spec) {
  if (spec.d != 1) throw DomainError("renormalized_self_energy_1d needs a 1D kernel");
  const double c = spec.c_ds;
  auto F = [&](double x) { return torus_green(spec, N, x) - g_eval(spec, x) / c; };
  // F(x) = F(0) + a_1 x^2 + a_2 x^4 + ..., so each Richardson column
  // removes one more even power.
  constexpr int kLevels = 24;
  std::vector<std::vector<double>> table;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int j = 0; j < kLevels; ++j) {
    const double x = 0.25 * std::ldexp(1.0, -j);
    std::vector<double> row{F(x)};
    double factor = 1.0;
    for (int k = 1; k <= j; ++k) {
      factor *= 4.0;
      row.push_back(row[k - 1] + (row[k - 1] - table[j - 1][k - 1]) / (factor - 1.0));
    }
    const double estimate = row.back();
    table.push_back(std::move(row));
    if (j >= 2 && std::abs(estimate - previous) < 1e-8) return c * c * estimate;
    previous = estimate;
  }
  throw NumericError("renormalized self-energy did not converge; the Green function "
                     "normalization does not cancel the kernel singularity",
                     std::abs(table.back().back() - table[kLevels - 2].back()));
}

double periodic_pair_energy(const TorusConfig& config, const KernelSpec& spec,
                            std::vector<double>* grad) {
  require_1d(config, spec);
  const int N = period_of(config);
  const std::size_t n = config.size();
  const double scale = spec.c_ds * spec.c_ds / N;
  if (grad) grad->assign(n, 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = wrap(config.points[i] - config.points[j], N);
      if (std::abs(diff) < kCoincidence) return std::numeric_limits<double>::infinity();
      sum += torus_green(spec, N, diff);
      if (grad) {
        // G is even, so both ordered pairs contribute 2 G'(a_i - a_j) to a_i.
        const double gp = 2.0 * scale * torus_green_derivative(spec, N, diff);
        (*grad)[i] += gp;
        (*grad)[j] -= gp;
      }
    }
  }
  return 2.0 * scale * sum;
}

LatticeEnergyReport periodic_W(const TorusConfig& config, const KernelSpec& spec) {
  require_1d(config, spec);
  LatticeEnergyReport rep;
  rep.self_term = renormalized_self_energy_1d(period_of(config), spec);
  rep.pair_term = periodic_pair_energy(config, spec);
  rep.W_value = rep.pair_term + rep.self_term;
  rep.xi = rep.W_value / spec.c_ds;
  return rep;
}

LatticeEnergyReport truncated_periodic_energy(const TorusConfig& config,
                                              const KernelSpec& spec, double eta) {
  require_1d(config, spec);
  if (spec.kind != KernelCase::kLog1d) {
    throw DomainError("truncated periodic energy is implemented for the log1d kernel only");
  }
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie in (0, 1)");
  if (config.size() > 1 && !(eta < 0.5 * min_circular_spacing(config))) {
    throw DomainError("eta must be below half the minimal spacing of the points");
  }
  const int N = period_of(config);
  const double c = spec.c_ds;
  const std::size_t n = config.size();
  double pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs += 2.0 * circle_average(N, config.points[j] - config.points[i], eta);
    }
  }
  const double self = static_cast<double>(n) * circle_average(N, 0.0, eta);
  LatticeEnergyReport rep;
  rep.eta = eta;
  rep.pair_term = c * c / N * pairs;
  rep.self_term = c * c / N * self + c * f_eta_integral(spec, eta) - c * g_eval(spec, eta);
  rep.W_value = rep.pair_term + rep.self_term;
  rep.xi = rep.W_value / c;
  return rep;
}

double scale_W(double value, double m, const KernelSpec& spec) {
  if (!(m > 0.0)) throw DomainError("density m must be positive");
  if (spec.is_log()) return m * (value - 2.0 * kPi / spec.d * std::log(m));
  return std::pow(m, 1.0 + spec.s / spec.d) * value;
}

double unscale_W(double value, double m, const KernelSpec& spec) {
  if (!(m > 0.0)) throw DomainError("density m must be positive");
  if (spec.is_log()) return value / m + 2.0 * kPi / spec.d * std::log(m);
  return value / std::pow(m, 1.0 + spec.s / spec.d);
}

double rescaled_eta(double eta, double m, int d) {
  if (!(m > 0.0)) throw DomainError("density m must be positive");
  return eta * std::pow(m, 1.0 / d);
}

}  // namespace riesz
