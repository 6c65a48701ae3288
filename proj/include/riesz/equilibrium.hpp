#pragma once

#include <span>
#include <string>
#include <vector>

#include "riesz/kernel.hpp"

namespace riesz {

enum class ModelShape { kSemicircle, kCircularLaw };

// Confining potential with a closed-form equilibrium measure. The support
// is the centered interval [-R, R] in 1D or the centered disk of radius R
// in 2D; the density is radial.
struct EquilibriumModel {
  std::string name;
  ModelShape shape = ModelShape::kSemicircle;
  KernelSpec spec;
  int d = 1;
  double support_radius = 0.0;
  double robin_c = 0.0;
  double energy_E = 0.0;
  double mean_V = 0.0;  // integral of V against the equilibrium measure
  double m_bar = 0.0;   // sup of the density
  // Scales V; 0 switches confinement off (translation-invariance tests).
  // Only the pair energy is meaningful in that mode.
  double v_scale = 1.0;
};

EquilibriumModel semicircle_model();
EquilibriumModel circular_law_model();

/// Looks a model up by its CLI name ("semicircle", "circular-law").
EquilibriumModel model_by_name(const std::string& name);

/// Copy of `model` with V replaced by 0.
EquilibriumModel without_confinement(EquilibriumModel model);

double V(const EquilibriumModel& model, std::span<const double> x);
/// Writes grad V(x) into `out` (length d).
void grad_V(const EquilibriumModel& model, std::span<const double> x,
            std::span<double> out);

/// Equilibrium density at x (zero off the support).
double density(const EquilibriumModel& model, std::span<const double> x);
/// Density as a function of |x|.
double radial_density(const EquilibriumModel& model, double r);

bool in_support(const EquilibriumModel& model, std::span<const double> x,
                double slack = 0.0);

/// h^mu(x) = int g(x - y) dmu(y). On the support the Frostman identity
/// c - V/2 is returned; off it the 1D value comes from quadrature and the
/// 2D value from the exterior potential of a uniform disk.
double potential(const EquilibriumModel& model, std::span<const double> x);

/// h^mu(x) by quadrature only, at any x.
double potential_quadrature(const EquilibriumModel& model,
                            std::span<const double> x, double tol = 1e-10);

/// zeta(x) = h^mu + V/2 - c, exactly 0 on the support.
double zeta(const EquilibriumModel& model, std::span<const double> x);

/// Max Frostman violation over a grid of points (flat, d coordinates
/// each), using potential_quadrature throughout.
double frostman_residual(const EquilibriumModel& model,
                         const std::vector<double>& grid);

/// Quadrature of the density over the support.
double total_mass(const EquilibriumModel& model);

/// Quadrature of int int g dmu dmu + int V dmu.
double mean_field_energy_quadrature(const EquilibriumModel& model);

/// Riesz: xi * int mu^{1+s/d}; log: xi - (1/d) int mu log mu.
double predicted_next_order_constant(const EquilibriumModel& model, double xi);

/// int mu log mu over the support.
double entropy_integral(const EquilibriumModel& model);

/// Cumulative distribution of the measure: of x in 1D, of |x| in 2D.
double cdf(const EquilibriumModel& model, double t);

/// Quantiles F^{-1}(k / (size - 1)), k = 0..size-1, of the same variable.
std::vector<double> quantile_table(const EquilibriumModel& model,
                                   std::size_t size = 4096);

}  // namespace riesz
