#include "riesz/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riesz/errors.hpp"
#include "riesz/hamiltonian.hpp"
#include "riesz/minimizer.hpp"

namespace riesz {

namespace {

constexpr double kTargetAcceptance = 0.35;
constexpr long kTuneWindow = 200;

double initial_sigma(const EquilibriumModel& model, std::size_t n) {
  return model.support_radius * std::pow(static_cast<double>(n), -1.0 / model.d);
}

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive and finite");
}

// Runs `count` steps, adapting sigma every kTuneWindow proposals.
void tune(ChainState& state, const EquilibriumModel& model, double beta, long count) {
  long window_accepts = 0;
  for (long s = 1; s <= count; ++s) {
    if (mh_step(state, model, beta)) ++window_accepts;
    if (s % kTuneWindow == 0) {
      const double rate = static_cast<double>(window_accepts) / kTuneWindow;
      state.proposal_sigma *= std::exp(2.0 * (rate - kTargetAcceptance));
      state.proposal_sigma = std::clamp(state.proposal_sigma, 1e-8, 1e3);
      window_accepts = 0;
    }
  }
}

}  // namespace

ChainState make_chain(const EquilibriumModel& model, Configuration init, double sigma,
                      std::uint64_t seed) {
  if (!(sigma > 0.0)) throw DomainError("proposal sigma must be positive");
  ChainState state;
  state.energy = hamiltonian(model, init);
  if (!std::isfinite(state.energy)) throw DomainError("initial chain state has infinite energy");
  state.config = std::move(init);
  state.rng.seed(seed);
  state.proposal_sigma = sigma;
  return state;
}

double delta_energy(const EquilibriumModel& model, const Configuration& config, std::size_t i,
                    std::span<const double> to) {
  const auto from = config.point(i);
  double pairs = 0.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j == i) continue;
    const auto xj = config.point(j);
    const double r_new = distance(to, xj);
    if (r_new <= 0.0) return kInfiniteEnergy;
    pairs += g_eval(model.spec, r_new) - g_eval(model.spec, distance(from, xj));
  }
  const auto n = static_cast<double>(config.size());
  return 2.0 * pairs + n * (V(model, to) - V(model, from));
}

bool metropolis_accept(double delta, double beta, double u) {
  if (delta <= 0.0) return true;
  if (!std::isfinite(delta)) return false;
  return u < std::exp(-beta * delta);
}

bool mh_step(ChainState& state, const EquilibriumModel& model, double beta) {
  require_beta(beta);
  const std::size_t n = state.config.size();
  const auto d = static_cast<std::size_t>(state.config.d);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::normal_distribution<double> normal(0.0, state.proposal_sigma);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t i = pick(state.rng);
  double proposal[3] = {0.0, 0.0, 0.0};
  const auto current = state.config.point(i);
  for (std::size_t k = 0; k < d; ++k) proposal[k] = current[k] + normal(state.rng);
  const std::span<const double> to(proposal, d);
  const double delta = delta_energy(model, state.config, i, to);
  ++state.proposals;
  if (!metropolis_accept(delta, beta, unit(state.rng))) return false;
  std::copy(to.begin(), to.end(), state.config.point(i).begin());
  state.energy += delta;
  ++state.accepted;
  return true;
}

namespace {

// W1 between sorted samples and the law whose quantile table is `table`
// (CDF linear between knots). Both CDFs are linear on every piece of the
// merged breakpoints, so a trapezoid split at sign changes is exact.
double w1_sorted(const std::vector<double>& table, const std::vector<double>& samples) {
  const double du = 1.0 / static_cast<double>(table.size() - 1);
  std::vector<double> knots(table.size() + samples.size());
  std::merge(table.begin(), table.end(), samples.begin(), samples.end(), knots.begin());
  const double m = static_cast<double>(samples.size());
  std::size_t seg = 0;    // table segment holding the current point
  std::size_t below = 0;  // samples <= current point
  auto F = [&](double t) {
    if (t <= table.front()) return 0.0;
    if (t >= table.back()) return 1.0;
    while (seg + 2 < table.size() && table[seg + 1] <= t) ++seg;
    const double w = table[seg + 1] - table[seg];
    const double frac = w > 0.0 ? (t - table[seg]) / w : 0.0;
    return (static_cast<double>(seg) + frac) * du;
  };
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double a = knots[k];
    const double b = knots[k + 1];
    while (below < samples.size() && samples[below] <= a) ++below;
    if (b <= a) continue;
    const double emp = static_cast<double>(below) / m;
    const double fa = emp - F(a);
    const double fb = emp - F(b);
    if (fa * fb >= 0.0) {
      total += 0.5 * (std::abs(fa) + std::abs(fb)) * (b - a);
    } else {
      const double root = a + (b - a) * fa / (fa - fb);
      total += 0.5 * (std::abs(fa) * (root - a) + std::abs(fb) * (b - root));
    }
  }
  return total;
}

// The variable whose law is compared: x in 1D, |x| in 2D.
std::vector<double> marginal_values(const EquilibriumModel& model, const Configuration& config) {
  std::vector<double> out;
  out.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    out.push_back(model.d == 1 ? p[0] : norm(p));
  }
  return out;
}

}  // namespace

double w1_to_equilibrium(const EquilibriumModel& model, std::vector<double> samples) {
  if (samples.empty()) throw DomainError("w1_to_equilibrium needs samples");
  std::sort(samples.begin(), samples.end());
  return w1_sorted(quantile_table(model, 4096), samples);
}

SamplerStats run_chain(const EquilibriumModel& model, std::size_t n, double beta, long steps,
                       long burn_in, std::uint64_t seed, const ChainOptions& opts) {
  require_beta(beta);
  if (n < 1) throw DomainError("run_chain needs n >= 1");
  if (!(burn_in >= 0 && steps > burn_in)) throw DomainError("run_chain needs steps > burn_in >= 0");
  ChainState state = make_chain(model, sample_initial(model, n, seed),
                                initial_sigma(model, n), splitmix64(seed));
  tune(state, model, beta, burn_in);

  SamplerStats stats;
  stats.steps = steps;
  stats.proposal_sigma = state.proposal_sigma;
  const long every = opts.trace_every > 0 ? opts.trace_every : static_cast<long>(n);
  const long accepted_before = state.accepted;
  const std::vector<double> table = quantile_table(model, 4096);
  std::vector<double> pooled;
  double next_order_sum = 0.0;
  double w1_sum = 0.0;
  for (long s = burn_in + 1; s <= steps; ++s) {
    mh_step(state, model, beta);
    if (opts.audit_every > 0 && s % opts.audit_every == 0) {
      const double exact = hamiltonian(model, state.config);
      stats.max_audit_error =
          std::max(stats.max_audit_error, std::abs(exact - state.energy) / (1.0 + std::abs(exact)));
      state.energy = exact;
    }
    if ((s - burn_in) % every == 0) {
      const double scaled = next_order_scaled_value(model, n, state.energy);
      stats.energy_trace.push_back({s, state.energy, scaled});
      next_order_sum += scaled;
      std::vector<double> snapshot = marginal_values(model, state.config);
      std::sort(snapshot.begin(), snapshot.end());
      w1_sum += w1_sorted(table, snapshot);
      pooled.insert(pooled.end(), snapshot.begin(), snapshot.end());
    }
  }
  stats.acceptance_rate =
      static_cast<double>(state.accepted - accepted_before) / static_cast<double>(steps - burn_in);
  if (!stats.energy_trace.empty()) {
    const auto records = static_cast<double>(stats.energy_trace.size());
    stats.mean_next_order = next_order_sum / records;
    stats.w1_to_equilibrium = w1_sum / records;
    std::sort(pooled.begin(), pooled.end());
    stats.w1_pooled = w1_sorted(table, pooled);
  }
  return stats;
}

AnnealResult anneal(const EquilibriumModel& model, std::size_t n,
                    const std::vector<double>& beta_schedule, long steps_per_stage,
                    std::uint64_t seed) {
  if (beta_schedule.empty()) throw DomainError("anneal needs a nonempty schedule");
  for (std::size_t k = 0; k < beta_schedule.size(); ++k) {
    require_beta(beta_schedule[k]);
    if (k > 0 && !(beta_schedule[k] > beta_schedule[k - 1])) {
      throw DomainError("anneal schedule must be increasing");
    }
  }
  if (steps_per_stage < 1) throw DomainError("anneal needs steps_per_stage >= 1");
  ChainState state = make_chain(model, sample_initial(model, n, seed),
                                initial_sigma(model, n), splitmix64(seed));
  AnnealResult res;
  const long tune_steps = steps_per_stage / 5;
  for (std::size_t k = 0; k < beta_schedule.size(); ++k) {
    const double beta = beta_schedule[k];
    const bool last = k + 1 == beta_schedule.size();
    tune(state, model, beta, tune_steps);
    if (last) {
      res.config = state.config;
      res.energy = state.energy;
    }
    for (long s = tune_steps; s < steps_per_stage; ++s) {
      mh_step(state, model, beta);
      if (last && state.energy < res.energy) {
        res.config = state.config;
        res.energy = state.energy;
      }
    }
    state.energy = hamiltonian(model, state.config);
    res.stage_energies.push_back(state.energy);
  }
  res.energy = hamiltonian(model, res.config);
  return res;
}

}  // namespace riesz
