#include "riesz/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "riesz/errors.hpp"
#include "riesz/hamiltonian.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct DescentOutcome {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  double gradient_norm = 0.0;
  std::vector<double> trace;
};

// Steepest descent with a Barzilai-Borwein trial step and Armijo
// backtracking. `energy(x, grad)` returns +inf for infeasible x.
//
// Close to a minimum the Armijo decrease c * step * |g|^2 drops below the
// rounding level of the energy. There a step is also accepted when the
// energy does not increase and the gradient norm shrinks.
template <typename Energy>
DescentOutcome descend(Energy&& energy, std::vector<double> x, double tol,
                       const MinimizeOptions& opts) {
  DescentOutcome out;
  std::vector<double> g;
  double f = energy(x, g);
  if (!std::isfinite(f)) throw DomainError("initial configuration has infinite energy");
  out.trace.push_back(f);

  double gmax = max_abs(g);
  double step = 1e-2 / std::max(1.0, gmax);
  std::vector<double> x_new(x.size());
  std::vector<double> g_new;
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (gmax <= tol) {
      out.converged = true;
      break;
    }
    const double g2 = dot(g, g);
    double trial = step;
    double f_new = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      for (std::size_t k = 0; k < x.size(); ++k) x_new[k] = x[k] - trial * g[k];
      f_new = energy(x_new, g_new);
      if (std::isfinite(f_new)) {
        if (f_new <= f - opts.armijo_c * trial * g2 ||
            (f_new <= f && dot(g_new, g_new) < g2)) {
          accepted = true;
          break;
        }
      }
      trial *= opts.backtrack_factor;
    }
    if (!accepted) {
      out.line_search_failed = true;
      break;
    }
    // Barzilai-Borwein step from the accepted displacement.
    double ss = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double s = x_new[k] - x[k];
      ss += s * s;
      sy += s * (g_new[k] - g[k]);
    }
    step = sy > 0.0 ? std::clamp(ss / sy, 1e-14, 1e6) : 2.0 * trial;
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    gmax = max_abs(g);
    out.trace.push_back(f);
  }
  out.x = std::move(x);
  out.value = f;
  out.iterations = it;
  out.gradient_norm = gmax;
  return out;
}

void require_options(const MinimizeOptions& opts) {
  if (opts.max_iterations < 1 || !(opts.gradient_tolerance > 0.0) ||
      !(opts.armijo_c > 0.0 && opts.armijo_c < 1.0) ||
      !(opts.backtrack_factor > 0.0 && opts.backtrack_factor < 1.0)) {
    throw DomainError("invalid minimizer options");
  }
}

const std::vector<double>& cached_quantiles(const EquilibriumModel& model) {
  static std::mutex mutex;
  static std::vector<double> semicircle;
  static std::vector<double> circular;
  std::lock_guard lock(mutex);
  auto& table = model.shape == ModelShape::kSemicircle ? semicircle : circular;
  if (table.empty()) table = quantile_table(model);
  return table;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

MinimizeResult minimize_local(const EquilibriumModel& model, const Configuration& init,
                              const MinimizeOptions& opts) {
  require_options(opts);
  if (init.empty() || !init.all_finite()) {
    throw DomainError("minimize_local needs a nonempty finite configuration");
  }
  Configuration work = init;
  auto energy = [&](const std::vector<double>& x, std::vector<double>& g) {
    work.coords = x;
    return energy_and_gradient(model, work, g);
  };
  const double tol = opts.gradient_tolerance * static_cast<double>(init.size());
  DescentOutcome d = descend(energy, init.coords, tol, opts);
  MinimizeResult res;
  res.config = Configuration(init.d, std::move(d.x));
  res.value = hamiltonian(model, res.config);
  res.iterations = d.iterations;
  res.converged = d.converged;
  res.line_search_failed = d.line_search_failed;
  res.gradient_norm = d.gradient_norm;
  res.energy_trace = std::move(d.trace);
  return res;
}

Configuration sample_initial(const EquilibriumModel& model, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords;
  coords.reserve(n * static_cast<std::size_t>(model.d));
  if (model.d == 1) {
    const auto& table = cached_quantiles(model);
    const double last = static_cast<double>(table.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const double pos = unit(rng) * last;
      const auto k = std::min(static_cast<std::size_t>(pos), table.size() - 2);
      const double frac = pos - static_cast<double>(k);
      coords.push_back(table[k] + frac * (table[k + 1] - table[k]));
    }
  } else {
    const double R = model.support_radius;
    std::uniform_real_distribution<double> box(-R, R);
    while (coords.size() < n * 2) {
      const double p[2] = {box(rng), box(rng)};
      if (norm(p) > R) continue;
      if (unit(rng) * model.m_bar > density(model, p)) continue;
      coords.push_back(p[0]);
      coords.push_back(p[1]);
    }
  }
  return Configuration(model.d, std::move(coords));
}

MinimizeResult multistart(const EquilibriumModel& model, std::size_t n, int trials,
                          const MinimizeOptions& opts) {
  if (trials < 1) throw DomainError("multistart needs at least one trial");
  if (n < 1) throw DomainError("multistart needs n >= 1");
  std::vector<MinimizeResult> results(static_cast<std::size_t>(trials));
  parallel_for(results.size(), [&](std::size_t k) {
    const Configuration init = sample_initial(model, n, splitmix64(opts.seed + k));
    results[k] = minimize_local(model, init, opts);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].value < results[best].value) best = k;
  }
  return std::move(results[best]);
}

SeparationReport separation_report(const EquilibriumModel& model, const Configuration& config) {
  SeparationReport rep;
  const std::size_t n = config.size();
  rep.min_spacing = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rep.min_spacing = std::min(rep.min_spacing, distance(config.point(i), config.point(j)));
    }
  }
  rep.scaled_spacing =
      rep.min_spacing * std::pow(static_cast<double>(n) * model.m_bar, 1.0 / model.d);
  for (std::size_t i = 0; i < n; ++i) {
    rep.max_zeta = std::max(rep.max_zeta, zeta(model, config.point(i)));
    rep.all_in_support = rep.all_in_support && in_support(model, config.point(i));
  }
  return rep;
}

TorusConfig minimize_periodic(const KernelSpec& spec, int N, double torus_length,
                              const MinimizeOptions& opts) {
  require_options(opts);
  if (spec.d != 1) throw DomainError("minimize_periodic works on the 1D torus");
  if (N < 2) throw DomainError("minimize_periodic needs N >= 2");
  if (std::abs(torus_length - N) > 1e-9 * N) {
    throw DomainError("torus length must equal N (unit density)");
  }
  // Start from a random perturbation of the sorted uniform draw.
  std::mt19937_64 rng(splitmix64(opts.seed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TorusConfig config;
  config.d = 1;
  config.length = torus_length;
  for (int i = 0; i < N; ++i) config.points.push_back(torus_length * unit(rng));
  std::sort(config.points.begin(), config.points.end());

  TorusConfig work = config;
  auto energy = [&](const std::vector<double>& x, std::vector<double>& g) {
    work.points = x;
    return periodic_pair_energy(work, spec, &g);
  };
  DescentOutcome d = descend(energy, config.points, opts.gradient_tolerance * N, opts);
  for (double& p : d.x) {
    p = std::fmod(p, torus_length);
    if (p < 0.0) p += torus_length;
  }
  config.points = std::move(d.x);
  return config;
}

FitResult fit_expansion(const EquilibriumModel& model,
                        const std::vector<std::pair<double, double>>& data,
                        const FitOptions& opts) {
  const KernelSpec& spec = model.spec;
  const int columns = opts.lower_order_terms ? 4 : 2;
  if (data.size() < 3 || data.size() < static_cast<std::size_t>(columns)) {
    throw DomainError("fit_expansion needs at least 3 data points and one per basis function");
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      if (data[i].first == data[j].first) throw DomainError("fit_expansion needs distinct n");
    }
  }
  const auto rows = static_cast<Eigen::Index>(data.size());
  Eigen::MatrixXd A(rows, columns);
  Eigen::VectorXd b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double n = data[static_cast<std::size_t>(r)].first;
    const double h = data[static_cast<std::size_t>(r)].second;
    A(r, 0) = n * n;
    if (spec.is_log()) {
      b(r) = h + n * std::log(n) / spec.d;
      A(r, 1) = n;
      if (opts.lower_order_terms) {
        A(r, 2) = std::log(n);
        A(r, 3) = 1.0;
      }
    } else {
      b(r) = h;
      A(r, 1) = std::pow(n, 1.0 + spec.s / spec.d);
      if (opts.lower_order_terms) {
        A(r, 2) = n;
        A(r, 3) = 1.0;
      }
    }
  }
  // Column scaling keeps the QR rank decision meaningful.
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index c = 0; c < columns; ++c) A.col(c) /= scale(c);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-12);
  if (qr.rank() < columns) {
    throw NumericError("fit_expansion: basis is rank deficient on these n values");
  }
  const Eigen::VectorXd coef = qr.solve(b);
  const Eigen::VectorXd fitted = A * coef;
  FitResult res;
  for (Eigen::Index c = 0; c < columns; ++c) res.coefficients.push_back(coef(c) / scale(c));
  res.E_hat = res.coefficients[0];
  res.next_order_hat = res.coefficients[1];
  for (Eigen::Index r = 0; r < rows; ++r) res.residuals.push_back(b(r) - fitted(r));
  return res;
}

}  // namespace riesz
