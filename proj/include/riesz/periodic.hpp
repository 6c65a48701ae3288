#pragma once

#include <optional>
#include <vector>

#include "riesz/kernel.hpp"

namespace riesz {

// N points in a periodic cell of volume N: the interval [0, N) in 1D, the
// square of side sqrt(N) in 2D. Points may repeat.
struct TorusConfig {
  int d = 1;
  double length = 1.0;          // side of the cell
  std::vector<double> points;   // flat, d coordinates per point

  std::size_t size() const { return points.size() / static_cast<std::size_t>(d); }
};

/// The lattice Z restricted to the torus of length N: points 0, 1, ..., N-1.
TorusConfig lattice_torus(int N);

struct LatticeEnergyReport {
  double W_value = 0.0;  // +inf when two points coincide
  double pair_term = 0.0;
  double self_term = 0.0;
  std::optional<double> eta;
  std::optional<double> xi;  // W / c_ds of this configuration
};

/// Periodic Green function of `spec` on the torus of length N; the closed
/// form in the log case, the integral representation otherwise.
double torus_green(const KernelSpec& spec, int N, double x);
double torus_green_derivative(const KernelSpec& spec, int N, double x);

/// c^2 lim_{x -> 0} (G(x) - g(x)/c), by Richardson extrapolation over
/// x = 2^{-j}. Throws NumericError if the iterates do not settle to 1e-8.
double renormalized_self_energy_1d(int N, const KernelSpec& spec);

/// (c^2 / N) sum_{i != j} G(a_i - a_j) + c^2 lim (G - g/c) for a 1D torus
/// configuration of unit density. Two-dimensional cells are not
/// supported: planar lattices go through relative_lattice_W.
LatticeEnergyReport periodic_W(const TorusConfig& config, const KernelSpec& spec);

/// The pair part of periodic_W and its gradient with respect to the
/// positions, for use by minimizers. Returns +inf on coincidence.
double periodic_pair_energy(const TorusConfig& config, const KernelSpec& spec,
                            std::vector<double>* grad = nullptr);

/// W_eta for the logarithmic 1D kernel: charges smeared on circles of
/// radius eta in the extended plane (64-point Gauss rule on the half circle), each carrying the
/// self-energy correction -c g(eta). Requires eta below half the minimal
/// spacing of the points.
LatticeEnergyReport truncated_periodic_energy(const TorusConfig& config,
                                              const KernelSpec& spec, double eta);

/// W at density m from W at unit density: m^{1+s/d} W in the Riesz case,
/// m (W - (2 pi / d) log m) in the log cases.
double scale_W(double value, double m, const KernelSpec& spec);
/// Inverse of scale_W.
double unscale_W(double value, double m, const KernelSpec& spec);
/// Truncation scale seen by the unit-density configuration when the
/// density-m configuration is truncated at eta: eta m^{1/d}.
double rescaled_eta(double eta, double m, int d);

}  // namespace riesz
