// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "covgp/types.hpp"

namespace covgp {

/// Pairwise Euclidean distances between the rows of a (n x d) and the rows
/// of b (m x d). Between a set and itself the result is symmetric with a
/// zero diagonal.
Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& a,
                                   const Eigen::MatrixXd& b);

/// Caches the parameter-dependent constants of the Matern kernel; use this
/// in loops that evaluate many distances under one hyperparameter vector.
class MaternEvaluator {
 public:
  explicit MaternEvaluator(const MaternParams& params);
  double operator()(double d) const;
  double at_zero() const { return at_zero_; }

 private:
  MaternParams params_;
  double scale_ = 0.0;     // sqrt(2 nu) / rho
  double log_pref_ = 0.0;  // (1 - nu) ln 2 - ln Gamma(nu)
  double at_zero_ = 0.0;   // gamma2 * (1 + tau2)
};

/// Matern covariance as a function of distance:
///   gamma2 * [ 2^{1-nu}/Gamma(nu) (sqrt(2 nu) d / rho)^nu
///              K_nu(sqrt(2 nu) d / rho) + tau2 * 1(d = 0) ]
/// At d = 0 the smooth term's limit is 1, so the value is gamma2*(1+tau2).
double matern(double d, const MaternParams& params);

/// Elementwise matern over a precomputed distance matrix.
Eigen::MatrixXd covariance_from_distances(const Eigen::MatrixXd& distances,
                                          const MaternParams& params);

/// covariance_from_distances(pairwise_distances(a, b), params).
Eigen::MatrixXd covariance_matrix(const Eigen::MatrixXd& a,
                                  const Eigen::MatrixXd& b,
                                  const MaternParams& params);

}  // namespace covgp
