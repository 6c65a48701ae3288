#include "riesz/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

void require_eta(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw DomainError("truncation scale eta must lie in (0, 1), got " +
                      std::to_string(eta));
  }
}

void require_positive_r(double r) {
  if (!(r > 0.0)) {
    throw DomainError("kernel evaluated at non-positive distance " +
                      std::to_string(r));
  }
}

}  // namespace

std::string_view to_string(KernelCase c) {
  switch (c) {
    case KernelCase::kRiesz: return "riesz";
    case KernelCase::kLog1d: return "log1d";
    case KernelCase::kLog2d: return "log2d";
    case KernelCase::kCoulomb: return "coulomb";
  }
  return "unknown";
}

KernelCase kernel_case_from_string(std::string_view name) {
  if (name == "riesz") return KernelCase::kRiesz;
  if (name == "log1d") return KernelCase::kLog1d;
  if (name == "log2d") return KernelCase::kLog2d;
  if (name == "coulomb") return KernelCase::kCoulomb;
  throw DomainError("unknown kernel case '" + std::string(name) + "'");
}

KernelSpec make_kernel(KernelCase kind, int d, double s) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  KernelSpec spec;
  spec.kind = kind;
  spec.d = d;
  switch (kind) {
    case KernelCase::kRiesz: {
      const double lo = std::max(0.0, d - 2.0);
      if (!(s > lo && s < d)) {
        throw DomainError("Riesz exponent s = " + std::to_string(s) +
                          " outside (" + std::to_string(lo) + ", " +
                          std::to_string(d) + ")");
      }
      spec.s = s;
      spec.k = 1;
      spec.gamma = s - d + 2 - spec.k;
      spec.c_ds = 2.0 * s * 2.0 * std::pow(kPi, d / 2.0) *
                  std::tgamma((s + 2.0 - d) / 2.0) / std::tgamma((s + 2.0) / 2.0);
      break;
    }
    case KernelCase::kCoulomb: {
      if (d < 3) throw DomainError("Coulomb case s = d - 2 requires d >= 3");
      spec.s = d - 2.0;
      spec.k = 0;
      spec.gamma = 0.0;
      spec.c_ds = (d - 2.0) * 2.0 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0);
      break;
    }
    case KernelCase::kLog1d:
      if (d != 1) throw DomainError("log1d kernel requires d = 1");
      spec.s = 0.0;
      spec.k = 1;
      spec.gamma = 0.0;
      spec.c_ds = 2.0 * kPi;
      break;
    case KernelCase::kLog2d:
      if (d != 2) throw DomainError("log2d kernel requires d = 2");
      spec.s = 0.0;
      spec.k = 0;
      spec.gamma = 0.0;
      spec.c_ds = 2.0 * kPi;
      break;
  }
  spec.alpha = (2.0 - spec.gamma - spec.k) / 2.0;
  return spec;
}

KernelSpec make_kernel_for(int d, double s) {
  if (s == 0.0) {
    if (d == 1) return make_kernel(KernelCase::kLog1d, 1);
    if (d == 2) return make_kernel(KernelCase::kLog2d, 2);
    throw DomainError("logarithmic kernel only defined for d = 1, 2");
  }
  if (d >= 3 && s == d - 2.0) return make_kernel(KernelCase::kCoulomb, d);
  return make_kernel(KernelCase::kRiesz, d, s);
}

double g_eval(const KernelSpec& spec, double r) {
  require_positive_r(r);
  if (spec.is_log()) return -std::log(r);
  return std::pow(r, -spec.s);
}

double g_prime(const KernelSpec& spec, double r) {
  require_positive_r(r);
  if (spec.is_log()) return -1.0 / r;
  return -spec.s * std::pow(r, -spec.s - 1.0);
}

double g_truncated(const KernelSpec& spec, double r, double eta) {
  require_eta(eta);
  require_positive_r(r);
  // g is decreasing, so min(g(r), g(eta)) = g(max(r, eta)).
  return g_eval(spec, std::max(r, eta));
}

double f_eta(const KernelSpec& spec, double r, double eta) {
  require_eta(eta);
  require_positive_r(r);
  if (r >= eta) return 0.0;
  if (spec.is_log()) return std::log(eta / r);
  // r^{-s} - eta^{-s} = eta^{-s} ((eta/r)^s - 1), evaluated without
  // forming r^{-s} directly.
  return std::exp(-spec.s * std::log(eta)) * std::expm1(spec.s * std::log(eta / r));
}

double ball_volume(int d, double r) {
  return std::pow(kPi, d / 2.0) * std::pow(r, d) / std::tgamma(d / 2.0 + 1.0);
}

double f_eta_integral(const KernelSpec& spec, double eta) {
  require_eta(eta);
  const int d = spec.d;
  const double area = d * ball_volume(d, 1.0);  // |S^{d-1}|
  if (spec.is_log()) {
    // int_0^eta log(eta/r) r^{d-1} dr = eta^d / d^2
    return area * std::pow(eta, d) / (static_cast<double>(d) * d);
  }
  const double s = spec.s;
  // int_0^eta (r^{-s} - eta^{-s}) r^{d-1} dr = eta^{d-s} (1/(d-s) - 1/d)
  return area * std::pow(eta, d - s) * (1.0 / (d - s) - 1.0 / d);
}

}  // namespace riesz
