#pragma once

#include <string>
#include <vector>

#include "riesz/kernel.hpp"

namespace riesz {

/// Unit-covolume lattice y^{-1/2} ((x, y) Z + (1, 0) Z), i.e. tau = x + iy.
struct Lattice2D {
  double x = 0.0;
  double y = 1.0;
};

Lattice2D square_lattice();
Lattice2D triangular_lattice();

/// Maps tau into {|x| <= 1/2, |tau| >= 1} by the modular group; the
/// lattice (and every lattice sum) is unchanged.
Lattice2D canonicalize(Lattice2D lat);

/// Z_tau(alpha) = sum over nonzero q of |q|^{-2 alpha}, alpha > 1, from
/// the theta-function split of the lattice sum into two rapidly
/// convergent incomplete-gamma series.
double epstein_zeta_direct(Lattice2D lat, double alpha);

/// Same split without the alpha > 1 restriction (analytic continuation;
/// alpha = 0 and 1 excluded).
double epstein_zeta_theta(Lattice2D lat, double alpha);

/// Chowla-Selberg expansion, alpha in (0, 1) or (1, inf). alpha = 1/2 is
/// a removable singularity of the expansion and is evaluated through its
/// limit.
double epstein_zeta_cs(Lattice2D lat, double alpha);

/// c^2 / (2 pi)^{2 alpha} (Z_tau(alpha) - Z_tri(alpha)) for a d = 2
/// kernel. For the logarithmic kernel (alpha = 1) the poles of the two
/// Epstein functions cancel and the finite difference is used.
double relative_lattice_W(Lattice2D lat, const KernelSpec& spec);

struct ScanCell {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

struct ScanResult {
  Lattice2D argmin;
  double min_value = 0.0;
  int resolution = 0;
  std::vector<ScanCell> cells;  // row-major in x, then y
};

/// relative_lattice_W over a resolution x resolution grid of the
/// fundamental domain: x_i = -1/2 + (i + 1)/res, and y from sqrt(1 - x^2)
/// up to 3.
ScanResult scan_fundamental_domain(const KernelSpec& spec, int resolution);

}  // namespace riesz
