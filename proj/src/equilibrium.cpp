#include "riesz/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "riesz/configuration.hpp"
#include "riesz/errors.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

double semicircle_density(double x) {
  const double q = 4.0 - x * x;
  return q > 0.0 ? std::sqrt(q) / (2.0 * kPi) : 0.0;
}

void require_dim(const EquilibriumModel& model, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(model.d)) {
    throw DomainError("point dimension does not match model '" + model.name + "'");
  }
}

// h of the semicircle by quadrature; the log singularity at y = x is put
// on a split point when x lies inside the support.
double semicircle_h(double x, double tol) {
  auto f = [x](double y) {
    const double r = std::abs(x - y);
    return r > 0.0 ? -std::log(r) * semicircle_density(y) : 0.0;
  };
  if (x > -2.0 && x < 2.0) {
    return quad::integrate(f, -2.0, x, tol).value + quad::integrate(f, x, 2.0, tol).value;
  }
  return quad::integrate(f, -2.0, 2.0, tol).value;
}

// h of the uniform unit disk at distance r from the center, by nested
// polar quadrature: |x - y|^2 = (r - rho)^2 + 4 r rho sin^2(theta / 2).
double disk_h(double r, double tol) {
  auto angular = [r, tol](double rho) {
    if (rho == 0.0 || r == 0.0) return -std::log(std::max(r, rho)) * kPi;
    auto f = [r, rho](double theta) {
      const double sn = std::sin(theta / 2.0);
      const double dist2 = (r - rho) * (r - rho) + 4.0 * r * rho * sn * sn;
      return dist2 > 0.0 ? -0.5 * std::log(dist2) : 0.0;
    };
    return quad::integrate(f, 0.0, kPi, tol).value;  // half circle
  };
  // density 1/pi, angular integral doubled by symmetry: factor 2/pi
  auto radial = [&angular](double rho) { return rho * angular(rho); };
  double total = 0.0;
  if (r > 0.0 && r < 1.0) {
    total = quad::integrate(radial, 0.0, r, tol).value + quad::integrate(radial, r, 1.0, tol).value;
  } else {
    total = quad::integrate(radial, 0.0, 1.0, tol).value;
  }
  return 2.0 / kPi * total;
}

}  // namespace

EquilibriumModel semicircle_model() {
  EquilibriumModel m;
  m.name = "semicircle";
  m.shape = ModelShape::kSemicircle;
  m.spec = make_kernel(KernelCase::kLog1d, 1);
  m.d = 1;
  m.support_radius = 2.0;
  m.robin_c = 0.5;
  m.energy_E = 0.75;
  m.mean_V = 0.5;
  m.m_bar = 1.0 / kPi;
  return m;
}

EquilibriumModel circular_law_model() {
  EquilibriumModel m;
  m.name = "circular-law";
  m.shape = ModelShape::kCircularLaw;
  m.spec = make_kernel(KernelCase::kLog2d, 2);
  m.d = 2;
  m.support_radius = 1.0;
  m.robin_c = 0.5;
  m.energy_E = 0.75;
  m.mean_V = 0.5;
  m.m_bar = 1.0 / kPi;
  return m;
}

EquilibriumModel model_by_name(const std::string& name) {
  if (name == "semicircle") return semicircle_model();
  if (name == "circular-law" || name == "circular") return circular_law_model();
  throw DomainError("unknown model '" + name + "'");
}

EquilibriumModel without_confinement(EquilibriumModel model) {
  model.v_scale = 0.0;
  return model;
}

namespace {
// The potential the equilibrium measure belongs to, before v_scale.
double confining_potential(const EquilibriumModel& model, std::span<const double> x) {
  const double r = norm(x);
  return model.shape == ModelShape::kSemicircle ? 0.5 * r * r : r * r;
}
}  // namespace

double V(const EquilibriumModel& model, std::span<const double> x) {
  return model.v_scale * confining_potential(model, x);
}

void grad_V(const EquilibriumModel& model, std::span<const double> x,
            std::span<double> out) {
  const double factor = model.shape == ModelShape::kSemicircle ? 1.0 : 2.0;
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = model.v_scale * factor * x[k];
}

double radial_density(const EquilibriumModel& model, double r) {
  r = std::abs(r);
  switch (model.shape) {
    case ModelShape::kSemicircle: return semicircle_density(r);
    case ModelShape::kCircularLaw: return r <= 1.0 ? 1.0 / kPi : 0.0;
  }
  return 0.0;
}

double density(const EquilibriumModel& model, std::span<const double> x) {
  require_dim(model, x);
  return radial_density(model, norm(x));
}

bool in_support(const EquilibriumModel& model, std::span<const double> x,
                double slack) {
  return norm(x) <= model.support_radius + slack;
}

double potential_quadrature(const EquilibriumModel& model,
                            std::span<const double> x, double tol) {
  require_dim(model, x);
  if (model.shape == ModelShape::kSemicircle) return semicircle_h(x[0], tol);
  return disk_h(norm(x), tol);
}

double potential(const EquilibriumModel& model, std::span<const double> x) {
  require_dim(model, x);
  if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
    throw DomainError("potential evaluated at a non-finite point");
  }
  if (in_support(model, x)) return model.robin_c - 0.5 * confining_potential(model, x);
  if (model.shape == ModelShape::kCircularLaw) return -std::log(norm(x));
  return semicircle_h(x[0], 1e-12);
}

double zeta(const EquilibriumModel& model, std::span<const double> x) {
  if (in_support(model, x)) return 0.0;
  const double z = potential(model, x) + 0.5 * confining_potential(model, x) - model.robin_c;
  return std::max(z, 0.0);
}

double frostman_residual(const EquilibriumModel& model,
                         const std::vector<double>& grid) {
  const auto d = static_cast<std::size_t>(model.d);
  if (grid.empty() || grid.size() % d != 0) {
    throw DomainError("frostman_residual needs a nonempty grid of d-dimensional points");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); i += d) {
    std::span<const double> x(grid.data() + i, d);
    const double excess =
        potential_quadrature(model, x) + 0.5 * confining_potential(model, x) - model.robin_c;
    worst = std::max(worst, in_support(model, x) ? std::abs(excess) : std::max(0.0, -excess));
  }
  return worst;
}

namespace {

// int_Sigma F(mu(x)) dx for a radial density.
template <typename F>
double integrate_over_support(const EquilibriumModel& model, F&& f, double tol) {
  const double R = model.support_radius;
  if (model.d == 1) {
    return quad::integrate([&](double x) { return f(radial_density(model, x)); }, -R, R, tol).value;
  }
  return 2.0 * kPi *
         quad::integrate([&](double r) { return r * f(radial_density(model, r)); }, 0.0, R, tol)
             .value;
}

}  // namespace

double total_mass(const EquilibriumModel& model) {
  return integrate_over_support(model, [](double m) { return m; }, 1e-12);
}

double entropy_integral(const EquilibriumModel& model) {
  return integrate_over_support(
      model, [](double m) { return m > 0.0 ? m * std::log(m) : 0.0; }, 1e-10);
}

double mean_field_energy_quadrature(const EquilibriumModel& model) {
  const double R = model.support_radius;
  if (model.d == 1) {
    auto f = [&](double x) {
      const double pt[1] = {x};
      return radial_density(model, x) *
             (potential_quadrature(model, pt, 1e-11) + confining_potential(model, pt));
    };
    return quad::integrate(f, -R, R, 1e-10).value;
  }
  auto f = [&](double r) {
    const double pt[2] = {r, 0.0};
    return 2.0 * kPi * r * radial_density(model, r) *
           (potential_quadrature(model, pt, 1e-10) + confining_potential(model, pt));
  };
  return quad::integrate(f, 0.0, R, 1e-9).value;
}

double predicted_next_order_constant(const EquilibriumModel& model, double xi) {
  const KernelSpec& spec = model.spec;
  if (spec.is_log()) return xi - entropy_integral(model) / spec.d;
  const double p = 1.0 + spec.s / spec.d;
  return xi * integrate_over_support(model, [p](double m) { return std::pow(m, p); }, 1e-10);
}

double cdf(const EquilibriumModel& model, double t) {
  if (model.shape == ModelShape::kCircularLaw) {
    if (t <= 0.0) return 0.0;
    return t >= 1.0 ? 1.0 : t * t;
  }
  if (t <= -2.0) return 0.0;
  if (t >= 2.0) return 1.0;
  return 0.5 + t * std::sqrt(4.0 - t * t) / (4.0 * kPi) + std::asin(t / 2.0) / kPi;
}

std::vector<double> quantile_table(const EquilibriumModel& model, std::size_t size) {
  if (size < 2) throw DomainError("quantile table needs at least two entries");
  const double lo = model.d == 1 ? -model.support_radius : 0.0;
  const double hi = model.support_radius;
  std::vector<double> table(size);
  table.front() = lo;
  table.back() = hi;
  for (std::size_t k = 1; k + 1 < size; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(size - 1);
    std::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::toms748_solve(
        [&](double t) { return cdf(model, t) - u; }, lo, hi,
        boost::math::tools::eps_tolerance<double>(50), iters);
    table[k] = 0.5 * (a + b);
  }
  return table;
}

}  // namespace riesz
