#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "riesz/configuration.hpp"
#include "riesz/equilibrium.hpp"
#include "riesz/kernel.hpp"
#include "riesz/periodic.hpp"

namespace riesz {

struct MinimizeOptions {
  int max_iterations = 5000;
  double gradient_tolerance = 1e-8;  // on max |grad|, scaled by n
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  std::uint64_t seed = 0;
};

struct MinimizeResult {
  Configuration config;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  double gradient_norm = 0.0;  // max-norm at the returned iterate
  std::vector<double> energy_trace;
};

/// Gradient descent with Barzilai-Borwein trial steps and Armijo
/// backtracking. Accepted energies never increase; steps that produce a
/// collision have infinite energy and are backtracked.
MinimizeResult minimize_local(const EquilibriumModel& model, const Configuration& init,
                              const MinimizeOptions& opts = {});

/// SplitMix64 mixing step, used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// n i.i.d. draws from the equilibrium measure: inverse CDF on the
/// quantile table in 1D, rejection from the bounding box in 2D.
Configuration sample_initial(const EquilibriumModel& model, std::size_t n, std::uint64_t seed);

/// Best of `trials` local minimizations started from sample_initial with
/// seeds splitmix64(opts.seed + k). Ties go to the lowest trial index.
MinimizeResult multistart(const EquilibriumModel& model, std::size_t n, int trials,
                          const MinimizeOptions& opts = {});

struct SeparationReport {
  double min_spacing = 0.0;
  double scaled_spacing = 0.0;  // min_spacing * (n m_bar)^{1/d}
  double max_zeta = 0.0;
  bool all_in_support = true;
};

SeparationReport separation_report(const EquilibriumModel& model, const Configuration& config);

/// Gradient descent on the periodic energy of N points on the 1D torus of
/// length `torus_length`.
TorusConfig minimize_periodic(const KernelSpec& spec, int N, double torus_length,
                              const MinimizeOptions& opts = {});

struct FitOptions {
  // Adds the next two terms of the expansion to the basis: {log n, 1} in
  // the log cases and {n, 1} for Riesz kernels.
  bool lower_order_terms = false;
};

struct FitResult {
  double E_hat = 0.0;
  double next_order_hat = 0.0;
  std::vector<double> coefficients;  // all fitted coefficients, basis order
  std::vector<double> residuals;     // data minus fit, per point
};

/// Least-squares fit of (n, min H_n) pairs. Riesz: basis {n^2, n^{1+s/d}}.
/// Log cases: the n log n coefficient is fixed at -1/d and {n^2, n} are
/// fitted to H + (1/d) n log n.
FitResult fit_expansion(const EquilibriumModel& model,
                        const std::vector<std::pair<double, double>>& data,
                        const FitOptions& opts = {});

}  // namespace riesz
