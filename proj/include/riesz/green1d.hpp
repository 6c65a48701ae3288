#pragma once

#include "riesz/kernel.hpp"

namespace riesz {

// Periodic Green function of the fractional operator on the 1D torus of
// length N with a neutralizing background, normalized so that
// G(x) - g(x)/c_ds stays bounded as x -> 0 (g the kernel with
// s = 1 - 2 alpha, the log kernel at alpha = 1/2). Its Fourier
// coefficients are kappa / (2 pi |m| / N)^{2 alpha} for m != 0.

/// The 1D kernel with alpha = (1 - s)/2; alpha must lie in (0, 1/2].
KernelSpec green_kernel(double alpha);

/// Fourier normalization kappa of the torus Green function for `spec`.
double green_kappa(const KernelSpec& spec);

/// Integral representation over t in (0, inf), evaluated by
/// double-exponential quadrature. x is taken modulo N.
double green_1d_integral(int N, double alpha, double x);

/// Cosine series: partial sum plus a tail summed through a Taylor
/// expansion of k^{-2 alpha} and Eulerian-polynomial closed forms.
double green_1d_series(int N, double alpha, double x);

/// Default evaluation path (the integral).
double green_1d(int N, double alpha, double x);

/// dG/dx from the differentiated integral representation.
double green_1d_derivative(int N, double alpha, double x);

/// -(1/2 pi) log|2 sin(pi x / N)|, the alpha = 1/2 case in closed form.
double green_1d_log(int N, double x);

}  // namespace riesz
