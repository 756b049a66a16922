// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#include "covgp/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "covgp/special.hpp"

namespace covgp {

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& a,
                                   const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument(
        "pairwise_distances: dimension mismatch, left is " +
        std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
        ", right is " + std::to_string(b.rows()) + "x" +
        std::to_string(b.cols()));
  }
  if (a.cols() < 1) {
    throw std::invalid_argument(
        "pairwise_distances: feature dimension must be >= 1");
  }
  if (!a.allFinite() || !b.allFinite()) {
    throw std::invalid_argument("pairwise_distances: inputs must be finite");
  }
  Eigen::MatrixXd out(a.rows(), b.rows());
  if (a.data() == b.data() && a.rows() == b.rows()) {
    // Self-distances: fill one triangle and mirror, so symmetry and the
    // zero diagonal hold exactly.
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out(i, i) = 0.0;
      for (Eigen::Index j = 0; j < i; ++j) {
        const double d = (a.row(i) - a.row(j)).norm();
        out(i, j) = d;
        out(j, i) = d;
      }
    }
    return out;
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      out(i, j) = (a.row(i) - b.row(j)).norm();
    }
  }
  return out;
}

MaternEvaluator::MaternEvaluator(const MaternParams& params)
    : params_(params) {
  params.validate();
  scale_ = std::sqrt(2.0 * params.nu) / params.rho;
  log_pref_ = (1.0 - params.nu) * M_LN2 - std::log(gamma_fn(params.nu));
  at_zero_ = params.gamma2 * (1.0 + params.tau2);
}

double MaternEvaluator::operator()(double d) const {
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw std::domain_error("matern: distance must be finite and >= 0, got " +
                            std::to_string(d));
  }
  if (d == 0.0) return at_zero_;
  const double arg = scale_ * d;
  // (arg)^nu and K_nu(arg) can individually leave double range while their
  // product stays tame; combine exponents before exponentiating.
  const ScaledBesselK k = bessel_k_scaled(params_.nu, arg);
  return params_.gamma2 * k.value *
         std::exp(log_pref_ + params_.nu * std::log(arg) + k.log_scale);
}

double matern(double d, const MaternParams& params) {
  return MaternEvaluator(params)(d);
}

Eigen::MatrixXd covariance_from_distances(const Eigen::MatrixXd& distances,
                                          const MaternParams& params) {
  const MaternEvaluator kernel(params);
  Eigen::MatrixXd out(distances.rows(), distances.cols());
  for (Eigen::Index j = 0; j < distances.cols(); ++j) {
    for (Eigen::Index i = 0; i < distances.rows(); ++i) {
      out(i, j) = kernel(distances(i, j));
    }
  }
  return out;
}

Eigen::MatrixXd covariance_matrix(const Eigen::MatrixXd& a,
                                  const Eigen::MatrixXd& b,
                                  const MaternParams& params) {
  const Eigen::MatrixXd dist = pairwise_distances(a, b);
  if (a.data() == b.data() && a.rows() == b.rows()) {
    const MaternEvaluator kernel(params);
    Eigen::MatrixXd out(dist.rows(), dist.cols());
    for (Eigen::Index i = 0; i < dist.rows(); ++i) {
      out(i, i) = kernel.at_zero();
      for (Eigen::Index j = 0; j < i; ++j) {
        const double v = kernel(dist(i, j));
        out(i, j) = v;
        out(j, i) = v;
      }
    }
    return out;
  }
  return covariance_from_distances(dist, params);
}

}  // namespace covgp
