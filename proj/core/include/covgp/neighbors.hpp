// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace covgp {

/// Exact k-nearest-neighbor index over a fixed set of training features.
/// Backed by a median-split k-d tree, with a brute-force path for high
/// dimension (d > 20) or tiny point sets. Ties in distance break toward
/// the lower training index, so query results are deterministic and equal
/// to the brute-force answer on every input.
///
/// The index owns a copy of the features and is immutable after
/// construction; concurrent queries are safe.
class NeighborIndex {
 public:
  struct Result {
    std::vector<int> ids;          // sorted by non-decreasing distance
    std::vector<double> distances; // elementwise with ids
  };

  explicit NeighborIndex(Eigen::MatrixXd features);

  /// k nearest training points to x, optionally excluding one training id
  /// (leave-one-out queries must never return the point itself).
  Result query(const Eigen::Ref<const Eigen::VectorXd>& x, int k,
               std::optional<int> exclude = std::nullopt) const;

  int size() const { return static_cast<int>(features_.rows()); }
  int dim() const { return static_cast<int>(features_.cols()); }
  const Eigen::MatrixXd& features() const { return features_; }

 private:
  struct Node {
    int axis = -1;        // -1 marks a leaf
    double split = 0.0;   // coordinate threshold on `axis`
    int left = -1;
    int right = -1;
    int begin = 0;        // leaf range into order_
    int end = 0;
  };

  int build(int begin, int end);
  void search(int node, const Eigen::Ref<const Eigen::VectorXd>& x,
              int exclude, struct KnnHeap& heap) const;

  Eigen::MatrixXd features_;
  std::vector<Node> nodes_;
  std::vector<int> order_;
  int root_ = -1;
  bool brute_force_ = false;

  static constexpr int kLeafSize = 16;
  static constexpr int kMaxTreeDim = 20;
};

}  // namespace covgp
