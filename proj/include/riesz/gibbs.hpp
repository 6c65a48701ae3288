#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "riesz/configuration.hpp"
#include "riesz/equilibrium.hpp"

namespace riesz {

struct ChainState {
  Configuration config;
  double energy = 0.0;  // cached H_n
  std::mt19937_64 rng;
  double proposal_sigma = 0.1;
  long proposals = 0;
  long accepted = 0;
};

ChainState make_chain(const EquilibriumModel& model, Configuration init, double sigma,
                      std::uint64_t seed);

/// Change of H_n when point i moves to `to`, in O(n). +inf on collision.
double delta_energy(const EquilibriumModel& model, const Configuration& config, std::size_t i,
                    std::span<const double> to);

/// Metropolis rule: accept when u < exp(-beta delta), u uniform in [0, 1).
bool metropolis_accept(double delta, double beta, double u);

/// One single-site Gaussian proposal at a uniformly chosen site.
/// Returns whether it was accepted.
bool mh_step(ChainState& state, const EquilibriumModel& model, double beta);

struct TraceRow {
  long step = 0;
  double energy = 0.0;
  double next_order_scaled = 0.0;
};

struct SamplerStats {
  long steps = 0;
  double acceptance_rate = 0.0;  // after burn-in
  double proposal_sigma = 0.0;   // frozen value used after burn-in
  std::vector<TraceRow> energy_trace;
  // Mean over recorded states of W1(empirical measure, equilibrium law).
  double w1_to_equilibrium = 0.0;
  // W1 of all recorded positions pooled into one sample. Approaches the
  // W1 of the mean density, so it does not see crystallization.
  double w1_pooled = 0.0;
  double mean_next_order = 0.0;
  double max_audit_error = 0.0;  // largest |cached - recomputed| / (1 + |H|)
};

struct ChainOptions {
  long trace_every = 0;     // 0: one record per sweep (n steps)
  long audit_every = 1000;  // cached-energy check interval
};

/// Runs a chain from a draw of the equilibrium measure. The proposal
/// width adapts during burn-in and is frozen afterwards.
SamplerStats run_chain(const EquilibriumModel& model, std::size_t n, double beta, long steps,
                       long burn_in, std::uint64_t seed, const ChainOptions& opts = {});

/// 1-Wasserstein distance between the empirical law of `samples` and the
/// equilibrium law of the same variable (x in 1D, |x| in 2D).
double w1_to_equilibrium(const EquilibriumModel& model, std::vector<double> samples);

struct AnnealResult {
  Configuration config;  // lowest-energy state seen in the final stage
  double energy = 0.0;
  std::vector<double> stage_energies;  // state energy at the end of each stage
};

AnnealResult anneal(const EquilibriumModel& model, std::size_t n,
                    const std::vector<double>& beta_schedule, long steps_per_stage,
                    std::uint64_t seed);

}  // namespace riesz
