#pragma once

namespace riesz::specfun {

/// Gamma function via the Lanczos approximation (g = 7, 9 terms) with
/// reflection below 1/2. Throws DomainError at the poles 0, -1, -2, ...
double gamma_fn(double x);

/// Riemann zeta on the real line. For x >= -1/2 the alternating eta
/// series is summed with Borwein's acceleration; below, the functional
/// equation maps the argument to 1 - x > 3/2. Rejects the pole x = 1.
double riemann_zeta(double x);

/// Modified Bessel function of the second kind K_nu(z), nu real, z > 0,
/// from the integral representation int_0^inf exp(-z cosh t) cosh(nu t) dt.
double bessel_k(double nu, double z);

/// Divisor power sum sigma_beta(r) = sum_{d | r} d^beta.
double sigma_div(double beta, long long r);

}  // namespace riesz::specfun
