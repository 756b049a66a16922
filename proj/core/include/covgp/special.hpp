// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace covgp {

/// Gamma function for x > 0, Lanczos approximation (g = 7, 9 terms).
/// Relative error below 1e-13 on (0, 50].
double gamma_fn(double x);

/// Modified Bessel function of the second kind K_nu(x) for real order.
/// Uses the symmetry K_{-nu} = K_nu; supports |nu| <= 50 and x > 0.
/// Relative error below 1e-12 for nu in [0, 5], x in [1e-6, 50].
///
/// Throws std::domain_error for x <= 0, std::invalid_argument for
/// |nu| > 50, and NumericalError when the value overflows double range
/// (tiny x with large nu) -- never returns NaN silently.
double bessel_k(double nu, double x);

/// K_nu(x) split as value * exp(log_scale), for callers that combine it
/// with compensating factors (the Matern kernel's (d/rho)^nu term).
/// Never overflows for valid input.
struct ScaledBesselK {
  double value = 0.0;      // mantissa, safely inside double range
  double log_scale = 0.0;  // natural-log scale factor
};
ScaledBesselK bessel_k_scaled(double nu, double x);

double std_normal_pdf(double z);
double std_normal_cdf(double z);

/// Inverse standard normal CDF on (0, 1). Rational initial estimate
/// refined with one Newton step against erfc; absolute error ~1e-15.
double std_normal_quantile(double p);

}  // namespace covgp
