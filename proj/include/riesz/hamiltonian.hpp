#pragma once

#include <limits>
#include <span>
#include <vector>

#include "riesz/configuration.hpp"
#include "riesz/equilibrium.hpp"

namespace riesz {

/// Energy assigned to configurations with coincident points.
inline constexpr double kInfiniteEnergy = std::numeric_limits<double>::infinity();

/// Sum over ordered pairs i != j of g(x_i - x_j); kInfiniteEnergy when
/// two points coincide.
double pair_energy(const KernelSpec& spec, const Configuration& config);

/// H_n = sum_{i != j} g(x_i - x_j) + n sum_i V(x_i).
double hamiltonian(const EquilibriumModel& model, const Configuration& config);

/// Gradient of H_n, flat with the same layout as the coordinates.
/// Throws DomainError if two points coincide.
std::vector<double> gradient(const EquilibriumModel& model, const Configuration& config);

/// H_n and its gradient in one pass. Returns kInfiniteEnergy (leaving
/// `grad` unspecified) on a collision instead of throwing.
double energy_and_gradient(const EquilibriumModel& model, const Configuration& config,
                           std::vector<double>& grad);

struct SplitReport {
  double H = 0.0;
  double mean_field = 0.0;      // n^2 E
  double zeta_term = 0.0;       // 2n sum zeta(x_i)
  double log_correction = 0.0;  // (n/d) log n in the log cases
  double next_order_direct = 0.0;
  double next_order_potential_route = 0.0;
  double route_gap = 0.0;
};

/// Decomposes H_n two ways: directly as H - n^2 E - 2n sum zeta, and
/// through the potential as sum g - 2n sum h + n^2 (E - int V dmu).
SplitReport split(const EquilibriumModel& model, const Configuration& config);

/// (H - n^2 E) / n^{1+s/d}, or (H - n^2 E + (n/d) log n) / n in the log cases.
double next_order_scaled(const EquilibriumModel& model, const Configuration& config);
/// Same scaling applied to a precomputed energy value.
double next_order_scaled_value(const EquilibriumModel& model, std::size_t n, double H);

/// Points in the open ball B_L(a) minus m |B_L(a)|.
double discrepancy(const Configuration& config, std::span<const double> a, double L, double m);

}  // namespace riesz
