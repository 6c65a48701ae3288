#include "riesz/hamiltonian.hpp"

#include <cmath>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

// Rows are grouped into a fixed number of blocks regardless of the worker
// count; partial sums are combined in block order.
constexpr std::size_t kBlocks = 16;

struct BlockRange {
  std::size_t begin, end;
};

BlockRange block(std::size_t b, std::size_t n) {
  return {b * n / kBlocks, (b + 1) * n / kBlocks};
}

double row_pair_sum(const KernelSpec& spec, const Configuration& config, std::size_t i) {
  double row = 0.0;
  const auto xi = config.point(i);
  for (std::size_t j = i + 1; j < config.size(); ++j) {
    const double r = distance(xi, config.point(j));
    if (r <= 0.0) return kInfiniteEnergy;
    row += g_eval(spec, r);
  }
  return row;
}

void require_points(const Configuration& config) {
  if (config.empty()) throw DomainError("configuration has no points");
}

}  // namespace

double pair_energy(const KernelSpec& spec, const Configuration& config) {
  const std::size_t n = config.size();
  std::vector<double> partial(kBlocks, 0.0);
  auto body = [&](std::size_t b) {
    const auto [lo, hi] = block(b, n);
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) sum += row_pair_sum(spec, config, i);
    partial[b] = sum;
  };
  if (n >= 256) {
    parallel_for(kBlocks, body);
  } else {
    for (std::size_t b = 0; b < kBlocks; ++b) body(b);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return 2.0 * total;
}

double hamiltonian(const EquilibriumModel& model, const Configuration& config) {
  require_points(config);
  const double pairs = pair_energy(model.spec, config);
  if (pairs == kInfiniteEnergy) return kInfiniteEnergy;
  const auto n = static_cast<double>(config.size());
  double conf = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) conf += V(model, config.point(i));
  return pairs + n * conf;
}

double energy_and_gradient(const EquilibriumModel& model, const Configuration& config,
                           std::vector<double>& grad) {
  require_points(config);
  const std::size_t n = config.size();
  const auto d = static_cast<std::size_t>(config.d);
  grad.assign(config.coords.size(), 0.0);
  double pairs = 0.0;
  std::vector<double> gv(d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = config.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xj = config.point(j);
      const double r = distance(xi, xj);
      if (r <= 0.0) return kInfiniteEnergy;
      pairs += g_eval(model.spec, r);
      // d/dx_i of 2 g(|x_i - x_j|), the factor 2 from ordered pairs
      const double w = 2.0 * g_prime(model.spec, r) / r;
      for (std::size_t k = 0; k < d; ++k) {
        const double c = w * (xi[k] - xj[k]);
        grad[i * d + k] += c;
        grad[j * d + k] -= c;
      }
    }
  }
  const auto nn = static_cast<double>(n);
  double conf = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    conf += V(model, config.point(i));
    grad_V(model, config.point(i), gv);
    for (std::size_t k = 0; k < d; ++k) grad[i * d + k] += nn * gv[k];
  }
  return 2.0 * pairs + nn * conf;
}

std::vector<double> gradient(const EquilibriumModel& model, const Configuration& config) {
  std::vector<double> grad;
  if (energy_and_gradient(model, config, grad) == kInfiniteEnergy) {
    throw DomainError("gradient undefined: two points coincide");
  }
  return grad;
}

SplitReport split(const EquilibriumModel& model, const Configuration& config) {
  require_points(config);
  SplitReport rep;
  const std::size_t n = config.size();
  const auto nn = static_cast<double>(n);
  const double pairs = pair_energy(model.spec, config);
  double sum_v = 0.0;
  double sum_zeta = 0.0;
  double sum_h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = config.point(i);
    sum_v += V(model, x);
    sum_zeta += zeta(model, x);
    sum_h += potential(model, x);
  }
  rep.H = pairs + nn * sum_v;
  rep.mean_field = nn * nn * model.energy_E;
  rep.zeta_term = 2.0 * nn * sum_zeta;
  rep.log_correction = model.spec.is_log() ? nn / model.d * std::log(nn) : 0.0;
  rep.next_order_direct = rep.H - rep.mean_field - rep.zeta_term;
  rep.next_order_potential_route =
      pairs - 2.0 * nn * sum_h + nn * nn * (model.energy_E - model.mean_V);
  rep.route_gap = rep.next_order_direct - rep.next_order_potential_route;
  return rep;
}

double next_order_scaled_value(const EquilibriumModel& model, std::size_t n, double H) {
  const auto nn = static_cast<double>(n);
  const KernelSpec& spec = model.spec;
  if (spec.is_log()) return (H - nn * nn * model.energy_E + nn / spec.d * std::log(nn)) / nn;
  return (H - nn * nn * model.energy_E) / std::pow(nn, 1.0 + spec.s / spec.d);
}

double next_order_scaled(const EquilibriumModel& model, const Configuration& config) {
  return next_order_scaled_value(model, config.size(), hamiltonian(model, config));
}

double discrepancy(const Configuration& config, std::span<const double> a, double L, double m) {
  if (!(L > 0.0)) throw DomainError("discrepancy radius must be positive");
  if (a.size() != static_cast<std::size_t>(config.d)) {
    throw DomainError("discrepancy center has the wrong dimension");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (distance(config.point(i), a) < L) ++count;
  }
  return static_cast<double>(count) - m * ball_volume(config.d, L);
}

}  // namespace riesz
