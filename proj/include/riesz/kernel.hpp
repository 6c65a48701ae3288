#pragma once

#include <string>
#include <string_view>

namespace riesz {

enum class KernelCase { kRiesz, kLog1d, kLog2d, kCoulomb };

std::string_view to_string(KernelCase c);
KernelCase kernel_case_from_string(std::string_view name);

// Interaction kernel together with its extension parameters.
//
// The logarithmic cases store s = 0 so that exponents such as n^{1+s/d}
// and the extension relation d - 2 + k + gamma = s read from one place.
struct KernelSpec {
  KernelCase kind = KernelCase::kLog1d;
  int d = 1;
  double s = 0.0;
  int k = 1;           // extension dimension
  double gamma = 0.0;  // weight exponent |y|^gamma
  double c_ds = 0.0;   // normalizing constant of the extended operator
  double alpha = 0.5;  // fractional order, (d - s) / 2

  bool is_log() const {
    return kind == KernelCase::kLog1d || kind == KernelCase::kLog2d;
  }
};

/// Builds a kernel spec; `s` is ignored in the logarithmic cases.
/// Throws DomainError for parameters outside the potential-case range.
KernelSpec make_kernel(KernelCase kind, int d, double s = 0.0);

/// Convenience overload choosing the case from (d, s): s = 0 means the
/// logarithmic kernel (d = 1, 2), s = d - 2 >= 1 the Coulomb kernel.
KernelSpec make_kernel_for(int d, double s);

/// g(r): r^{-s}, or -log r in the logarithmic cases. Requires r > 0.
double g_eval(const KernelSpec& spec, double r);

/// g'(r): -s r^{-s-1}, or -1/r.
double g_prime(const KernelSpec& spec, double r);

/// min(g(r), g(eta)), the kernel truncated at scale eta in (0, 1).
double g_truncated(const KernelSpec& spec, double r, double eta);

/// f_eta(r) = (g(r) - g(eta))_+, supported in r < eta.
double f_eta(const KernelSpec& spec, double r, double eta);

/// Integral of f_eta over R^d (the trace of the truncation on the
/// physical space), in closed form.
double f_eta_integral(const KernelSpec& spec, double eta);

/// Volume of the d-dimensional ball of radius r.
double ball_volume(int d, double r);

}  // namespace riesz
