#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace riesz {

/// n labelled points in R^d, stored row-major (point i occupies
/// coords[i*d .. i*d + d)).
struct Configuration {
  int d = 1;
  std::vector<double> coords;

  Configuration() = default;
  Configuration(int dim, std::vector<double> flat);

  std::size_t size() const { return coords.size() / static_cast<std::size_t>(d); }
  bool empty() const { return coords.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * d, static_cast<std::size_t>(d)};
  }
  std::span<double> point(std::size_t i) {
    return {coords.data() + i * d, static_cast<std::size_t>(d)};
  }

  bool all_finite() const;
};

double distance(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace riesz
