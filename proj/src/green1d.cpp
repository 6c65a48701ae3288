#include "riesz/green1d.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

void require_period(int N) {
  if (N < 1) throw DomainError("torus length N must be a positive integer");
}

// x modulo N in [0, N); rejects the singular point.
double reduce(int N, double x) {
  if (!std::isfinite(x)) throw DomainError("Green function evaluated at a non-finite point");
  double r = std::fmod(x, static_cast<double>(N));
  if (r < 0.0) r += N;
  if (r == 0.0) throw DomainError("Green function is singular at multiples of N");
  return r;
}

// Prefactor kappa * 2 N^{2a - 1} / (2 pi)^{2a} of the cosine series
// sum_k cos(k y) k^{-2a}, y = 2 pi x / N.
double series_prefactor(int N, double alpha) {
  return green_kappa(green_kernel(alpha)) * 2.0 * std::pow(N, 2.0 * alpha - 1.0) /
         std::pow(2.0 * kPi, 2.0 * alpha);
}

// Half-line integral with an error check relative to the magnitude, as
// the values grow without bound near the singularity.
template <typename F>
double half_line(F&& f) {
  const quad::Estimate est = quad::integrate_to_infinity(f, 0.0, 1e-13);
  if (!(est.error <= 1e-8 * std::max(1.0, std::abs(est.value)))) {
    throw NumericError("torus Green function quadrature did not converge", est.error);
  }
  return est.value;
}

}  // namespace

KernelSpec green_kernel(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    throw DomainError("1D torus Green function needs alpha in (0, 1/2], got " +
                      std::to_string(alpha));
  }
  if (alpha == 0.5) return make_kernel(KernelCase::kLog1d, 1);
  return make_kernel(KernelCase::kRiesz, 1, 1.0 - 2.0 * alpha);
}

double green_kappa(const KernelSpec& spec) {
  if (spec.d != 1) throw DomainError("green_kappa is defined for d = 1 kernels");
  // Fourier transform of -log|x| is 1/(2|xi|); of |x|^{-s} it is
  // C_s |xi|^{s-1}. Matching (1/c) g-hat at xi = m/N fixes kappa.
  if (spec.is_log()) return 0.5;
  const double s = spec.s;
  const double c_s = std::pow(kPi, s - 0.5) * specfun::gamma_fn((1.0 - s) / 2.0) /
                     specfun::gamma_fn(s / 2.0);
  return c_s * std::pow(2.0 * kPi, 1.0 - s) / spec.c_ds;
}

double green_1d_integral(int N, double alpha, double x) {
  require_period(N);
  const double y = 2.0 * kPi * reduce(N, x) / N;
  const double sh = std::sin(y / 2.0);
  const double s2 = sh * sh;
  const double p = 2.0 * alpha - 1.0;
  // sum_k e^{-kt} cos(ky) = (e^{-t} cos y - e^{-2t}) / (1 - 2 e^{-t} cos y + e^{-2t}),
  // written with 1 - cos y = 2 sin^2(y/2) to keep small t and y accurate
  auto f = [s2, p](double t) {
    if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
    const double e = std::exp(-t);
    const double om = -std::expm1(-t);  // 1 - e^{-t}
    const double den = om * om + 4.0 * e * s2;
    if (den == 0.0) return 0.0;
    return std::pow(t, p) * e * (om - 2.0 * s2) / den;
  };
  const double integral = half_line(f);
  return series_prefactor(N, alpha) * integral / specfun::gamma_fn(2.0 * alpha);
}

double green_1d_derivative(int N, double alpha, double x) {
  require_period(N);
  const double y = 2.0 * kPi * reduce(N, x) / N;
  const double sy = std::sin(y);
  const double sh = std::sin(y / 2.0);
  const double s2 = sh * sh;
  const double p = 2.0 * alpha - 1.0;
  // d/dy of the kernel above: -e^{-t} sin y (1 - e^{-2t}) / den^2
  auto f = [s2, sy, p](double t) {
    if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
    const double e = std::exp(-t);
    const double om = -std::expm1(-t);
    const double den = om * om + 4.0 * e * s2;
    if (den == 0.0) return 0.0;
    return -std::pow(t, p) * e * sy * om * (1.0 + e) / (den * den);
  };
  const double integral = half_line(f);
  return series_prefactor(N, alpha) * (2.0 * kPi / N) * integral /
         specfun::gamma_fn(2.0 * alpha);
}

double green_1d_series(int N, double alpha, double x) {
  require_period(N);
  const double y = 2.0 * kPi * reduce(N, x) / N;
  const std::complex<double> z = std::polar(1.0, y);
  const double a2 = 2.0 * alpha;

  // Head: plain partial sum up to K.
  const double gap = std::abs(1.0 - z);
  const long K = std::max<long>(256, static_cast<long>(std::ceil(40.0 / gap)));
  double head = 0.0;
  for (long k = 1; k <= K; ++k) head += std::pow(static_cast<double>(k), -a2) * std::cos(k * y);

  // Tail sum_{k >= m} z^k k^{-2a}, m = K + 1: expand b(m + k) in a Taylor
  // series about m and sum each power against z^k in closed form,
  //   sum_{k >= 0} k^j z^k = z A_j(z) / (1 - z)^{j+1}   (j >= 1),
  // with A_j the Eulerian polynomials. Term j is of size (m |1 - z|)^{-j}.
  const auto mm = static_cast<double>(K + 1);
  constexpr int kOrder = 24;
  std::vector<double> eulerian{1.0};  // coefficients of A_j
  const std::complex<double> w = 1.0 / (1.0 - z);
  std::complex<double> sum = w;  // j = 0
  std::complex<double> wpow = w;
  double taylor = 1.0;  // (-1)^j binom(2a + j - 1, j) m^{-j}
  // Near z = -1 the even-order terms nearly vanish (A_j(-1) = 0 for even
  // j), so stopping decisions look at the last two term sizes.
  double previous = std::abs(w);
  double before = previous;
  for (int j = 1; j < kOrder; ++j) {
    std::vector<double> next(j, 0.0);
    for (int i = 0; i < j; ++i) {
      const std::size_t n_prev = eulerian.size();
      const auto ui = static_cast<std::size_t>(i);
      const double keep = ui < n_prev ? (i + 1.0) * eulerian[ui] : 0.0;
      const double shift = ui > 0 && ui - 1 < n_prev ? (j - i) * eulerian[ui - 1] : 0.0;
      next[i] = keep + shift;
    }
    eulerian = std::move(next);
    std::complex<double> poly = 0.0;
    for (int i = j - 1; i >= 0; --i) poly = poly * z + eulerian[i];
    taylor *= -(a2 + j - 1.0) / (j * mm);
    wpow *= w;
    const std::complex<double> term = taylor * z * poly * wpow;
    const double size = std::abs(term);
    const double recent = std::max(previous, before);
    if (size > recent) break;  // asymptotic series has turned
    sum += term;
    before = previous;
    previous = size;
    if (std::max(size, before) < 1e-17 * std::abs(sum)) break;
  }
  const std::complex<double> tail = std::pow(z, mm) * std::pow(mm, -a2) * sum;
  return series_prefactor(N, alpha) * (head + tail.real());
}

double green_1d(int N, double alpha, double x) { return green_1d_integral(N, alpha, x); }

double green_1d_log(int N, double x) {
  require_period(N);
  const double r = reduce(N, x);
  return -std::log(std::abs(2.0 * std::sin(kPi * r / N))) / (2.0 * kPi);
}

}  // namespace riesz
