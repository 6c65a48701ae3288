#include "riesz/configuration.hpp"

#include <cmath>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

Configuration::Configuration(int dim, std::vector<double> flat)
    : d(dim), coords(std::move(flat)) {
  if (d < 1) throw DomainError("configuration dimension must be >= 1");
  if (coords.size() % static_cast<std::size_t>(d) != 0) {
    throw DomainError("coordinate count " + std::to_string(coords.size()) +
                      " is not a multiple of d = " + std::to_string(d));
  }
}

bool Configuration::all_finite() const {
  for (double c : coords) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double norm(std::span<const double> a) {
  double sum = 0.0;
  for (double v : a) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace riesz
