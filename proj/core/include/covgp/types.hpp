// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace covgp {

/// Raised when a numerical procedure fails (non-factorizable covariance,
/// special-function overflow, degenerate posterior variance, ...).
/// The message carries the offending inputs so failures are reproducible.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matern hyperparameter vector: smoothness, length-scale, variance scale
/// and nugget. The nugget scales with gamma2 (it lives inside the bracket
/// of the kernel), so the prior variance at zero distance is
/// gamma2 * (1 + tau2).
struct MaternParams {
  double nu = 0.5;      // smoothness, > 0
  double rho = 1.0;     // length-scale, > 0, in feature-distance units
  double gamma2 = 1.0;  // variance scale, > 0
  double tau2 = 0.0;    // nugget, >= 0

  void validate() const;
};

/// Training (or test) data: features are rows of an n x d matrix, with one
/// scalar response per row.
struct Dataset {
  Eigen::MatrixXd features;   // n x d
  Eigen::VectorXd responses;  // n

  Eigen::Index n() const { return features.rows(); }
  Eigen::Index dim() const { return features.cols(); }
  void validate() const;
};

/// A single predictive distribution: N(mean, variance).
struct PosteriorMoments {
  double mean = 0.0;
  double variance = 0.0;
};

inline void MaternParams::validate() const {
  auto bad = [](double v) { return !std::isfinite(v); };
  if (bad(nu) || bad(rho) || bad(gamma2) || bad(tau2)) {
    throw std::invalid_argument("MaternParams: all fields must be finite");
  }
  if (nu <= 0.0 || rho <= 0.0 || gamma2 <= 0.0 || tau2 < 0.0) {
    throw std::invalid_argument(
        "MaternParams: require nu > 0, rho > 0, gamma2 > 0, tau2 >= 0 (got "
        "nu=" + std::to_string(nu) + ", rho=" + std::to_string(rho) +
        ", gamma2=" + std::to_string(gamma2) +
        ", tau2=" + std::to_string(tau2) + ")");
  }
}

inline void Dataset::validate() const {
  if (features.rows() != responses.size()) {
    throw std::invalid_argument(
        "Dataset: feature rows (" + std::to_string(features.rows()) +
        ") != response count (" + std::to_string(responses.size()) + ")");
  }
  if (!features.allFinite() || !responses.allFinite()) {
    throw std::invalid_argument("Dataset: all values must be finite");
  }
}

}  // namespace covgp
