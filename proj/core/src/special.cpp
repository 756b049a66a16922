// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#include "covgp/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "covgp/types.hpp"

namespace covgp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Taylor coefficients of 1/Gamma(z) about z = 0: 1/Gamma(z) = sum c_k z^k.
// Generated with mpmath at 60 digits; see tests/support/gen_oracle_tables.py.
constexpr double kRecipGamma[29] = {
    0.0,
    1.0,
    0.577215664901532860607,
    -0.655878071520253881077,
    -0.0420026350340952355290,
    0.166538611382291489502,
    -0.0421977345555443367482,
    -0.00962197152787697356211,
    0.00721894324666309954240,
    -0.00116516759185906511211,
    -0.000215241674114950972816,
    0.000128050282388116186153,
    -0.0000201348547807882386557,
    -0.00000125049348214267065735,
    0.00000113302723198169588237,
    -2.05633841697760710345e-7,
    6.11609510448141581786e-9,
    5.00200764446922293006e-9,
    -1.18127457048702014459e-9,
    1.04342671169110051049e-10,
    7.78226343990507125405e-12,
    -3.69680561864220570819e-12,
    5.10037028745447597902e-13,
    -2.05832605356650678322e-14,
    -5.34812253942301798237e-15,
    1.22677862823826079016e-15,
    -1.18125930169745876951e-16,
    1.18669225475160033258e-18,
    1.41238065531803178156e-18,
};

// Temme's auxiliary gamma combinations for |mu| <= 1/2:
//   g1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)   (finite limit at 0)
//   g2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// Both follow from the reciprocal-gamma Taylor series: with
// 1/Gamma(1+mu) = sum_k c_k mu^{k-1}, the odd/even parts give
//   g1 = -(c_2 + c_4 mu^2 + c_6 mu^4 + ...)
//   g2 =   c_1 + c_3 mu^2 + c_5 mu^4 + ...
void temme_gamma(double mu, double& g1, double& g2, double& gamma_1p,
                 double& gamma_1m) {
  const double mu2 = mu * mu;
  double e = 0.0;  // even-index accumulation for g1
  double o = 0.0;  // odd-index accumulation for g2
  double p = 1.0;
  for (int k = 1; k + 1 < 29; k += 2) {
    o += kRecipGamma[k] * p;
    e += kRecipGamma[k + 1] * p;
    p *= mu2;
  }
  g1 = -e;
  g2 = o;
  gamma_1p = 1.0 / (g2 - mu * g1);
  gamma_1m = 1.0 / (g2 + mu * g1);
}

// Temme power series for exp(x) * K_mu(x) and exp(x) * K_{mu+1}(x);
// requires |mu| <= 1/2 and converges well for x <= 2.
void bessel_k_temme(double mu, double x, double& k_mu, double& k_mu1) {
  const double half_x = 0.5 * x;
  const double ln_half_x = std::log(half_x);
  const double sigma = -mu * ln_half_x;
  const double pi_mu = M_PI * mu;
  const double sinrat = std::abs(pi_mu) < kEps ? 1.0 : pi_mu / std::sin(pi_mu);
  const double sinhrat = std::abs(sigma) < kEps ? 1.0 : std::sinh(sigma) / sigma;

  double g1, g2, gamma_1p, gamma_1m;
  temme_gamma(mu, g1, g2, gamma_1p, gamma_1m);

  double f = sinrat * (std::cosh(sigma) * g1 - sinhrat * ln_half_x * g2);
  double p = 0.5 * std::exp(-mu * ln_half_x) * gamma_1p;
  double q = 0.5 * std::exp(mu * ln_half_x) * gamma_1m;
  double c = 1.0;
  double sum0 = f;
  double sum1 = p;
  const double hx2 = half_x * half_x;
  for (int k = 1; k <= 2000; ++k) {
    f = (k * f + p + q) / (k * k - mu * mu);
    c *= hx2 / k;
    p /= (k - mu);
    q /= (k + mu);
    const double h = -k * f + p;
    const double del0 = c * f;
    sum0 += del0;
    sum1 += c * h;
    if (std::abs(del0) < 0.5 * kEps * std::abs(sum0)) break;
  }
  const double ex = std::exp(x);
  k_mu = sum0 * ex;
  k_mu1 = sum1 * (2.0 / x) * ex;
}

// Steed/Thompson-Barnett continued fraction for exp(x) * K_mu(x) and
// exp(x) * K_{mu+1}(x); requires |mu| <= 1/2, stable for x > 2.
void bessel_k_cf2(double mu, double x, double& k_mu, double& k_mu1) {
  double bi = 2.0 * (1.0 + x);
  double di = 1.0 / bi;
  double delh = di;
  double h = di;
  double qi = 0.0;
  double qip1 = 1.0;
  double ai = -(0.25 - mu * mu);
  const double a1 = ai;
  double ci = -ai;
  double big_q = -ai;
  double s = 1.0 + big_q * delh;

  for (int i = 2; i <= 20000; ++i) {
    ai -= 2.0 * (i - 1);
    ci = -ai * ci / i;
    const double tmp = (qi - bi * qip1) / ai;
    qi = qip1;
    qip1 = tmp;
    big_q += ci * qip1;
    bi += 2.0;
    di = 1.0 / (bi + ai * di);
    delh = (bi * di - 1.0) * delh;
    h += delh;
    const double dels = big_q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }

  h *= -a1;
  k_mu = std::sqrt(M_PI / (2.0 * x)) / s;
  k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("gamma_fn: requires finite x > 0, got " +
                            std::to_string(x));
  }
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

ScaledBesselK bessel_k_scaled(double nu, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("bessel_k: requires finite x > 0, got x=" +
                            std::to_string(x));
  }
  nu = std::abs(nu);  // K_{-nu} = K_nu
  if (!(nu <= 50.0)) {
    throw std::invalid_argument("bessel_k: order |nu| <= 50 required, got " +
                                std::to_string(nu));
  }

  const int shift = static_cast<int>(nu + 0.5);
  const double mu = nu - shift;  // in [-1/2, 1/2]

  double a, b;  // exp(x) * (K_mu, K_{mu+1})
  if (x <= 2.0) {
    bessel_k_temme(mu, x, a, b);
  } else {
    bessel_k_cf2(mu, x, a, b);
  }

  long scale_exp2 = 0;
  if (shift == 0) {
    b = a;
  } else {
    for (int j = 1; j < shift; ++j) {
      const double c = (2.0 * (mu + j) / x) * b + a;
      a = b;
      b = c;
      if (std::abs(b) > 0x1.0p+256) {
        int ex;
        std::frexp(b, &ex);
        a = std::ldexp(a, -ex);
        b = std::ldexp(b, -ex);
        scale_exp2 += ex;
      }
    }
  }
  return {b, static_cast<double>(scale_exp2) * M_LN2 - x};
}

double bessel_k(double nu, double x) {
  const ScaledBesselK s = bessel_k_scaled(nu, x);
  const double log_value = std::log(s.value) + s.log_scale;
  if (log_value >= std::log(std::numeric_limits<double>::max())) {
    throw NumericalError("bessel_k: overflow for nu=" + std::to_string(nu) +
                         ", x=" + std::to_string(x) +
                         " (log value ~ " + std::to_string(log_value) + ")");
  }
  // Exact power-of-two rescale keeps full precision of the mantissa path.
  const double frac = s.log_scale / M_LN2;
  const long e2 = static_cast<long>(frac);
  const double rest = std::exp(s.log_scale - static_cast<double>(e2) * M_LN2);
  return std::ldexp(s.value * rest, static_cast<int>(e2));
}

double std_normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double std_normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("std_normal_quantile: p must lie in (0, 1), got " +
                            std::to_string(p));
  }
  if (p < 0.5) return -std_normal_quantile(1.0 - p);

  // Acklam's rational approximation (~1.15e-9 relative), central/tail split.
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};

  double x;
  if (p < 0.97575) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Newton step against the complementary CDF; works in the upper-tail
  // complement so p near 1 keeps full precision.
  const double upper = 0.5 * std::erfc(x / std::sqrt(2.0));  // 1 - Phi(x)
  const double err = (1.0 - p) - upper;
  x += err / std_normal_pdf(x);
  return x;
}

}  // namespace covgp
