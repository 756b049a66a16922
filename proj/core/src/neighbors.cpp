// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#include "covgp/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace covgp {

namespace {

struct Candidate {
  double dist2;
  int id;
};

// Orders candidates worst-first: larger distance first, ties on the higher
// id, so the heap top is always the entry to evict.
inline bool worse(const Candidate& a, const Candidate& b) {
  if (a.dist2 != b.dist2) return a.dist2 > b.dist2;
  return a.id > b.id;
}

}  // namespace

// Bounded worst-on-top heap of the best k candidates seen so far.
struct KnnHeap {
  explicit KnnHeap(int k) : k(k) { entries.reserve(k); }

  bool full() const { return static_cast<int>(entries.size()) == k; }
  double worst_dist2() const { return entries.front().dist2; }

  void offer(double dist2, int id) {
    const Candidate c{dist2, id};
    if (!full()) {
      entries.push_back(c);
      std::push_heap(entries.begin(), entries.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return worse(b, a);
                     });
      return;
    }
    if (worse(entries.front(), c)) {
      std::pop_heap(entries.begin(), entries.end(),
                    [](const Candidate& a, const Candidate& b) {
                      return worse(b, a);
                    });
      entries.back() = c;
      std::push_heap(entries.begin(), entries.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return worse(b, a);
                     });
    }
  }

  int k;
  std::vector<Candidate> entries;
};

NeighborIndex::NeighborIndex(Eigen::MatrixXd features)
    : features_(std::move(features)) {
  if (features_.rows() < 2) {
    throw std::invalid_argument(
        "NeighborIndex: need at least 2 training points, got " +
        std::to_string(features_.rows()));
  }
  if (features_.cols() < 1) {
    throw std::invalid_argument("NeighborIndex: feature dimension must be >= 1");
  }
  if (!features_.allFinite()) {
    throw std::invalid_argument("NeighborIndex: features must be finite");
  }

  const int n = static_cast<int>(features_.rows());
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);

  brute_force_ = features_.cols() > kMaxTreeDim || n <= 2 * kLeafSize;
  if (!brute_force_) {
    nodes_.reserve(2 * n / kLeafSize + 2);
    root_ = build(0, n);
  }
}

int NeighborIndex::build(int begin, int end) {
  const int node_id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  if (end - begin <= kLeafSize) {
    nodes_[node_id].begin = begin;
    nodes_[node_id].end = end;
    return node_id;
  }

  // Split on the axis with the widest spread over this range.
  int axis = 0;
  double best_spread = -1.0;
  for (int d = 0; d < dim(); ++d) {
    double lo = features_(order_[begin], d);
    double hi = lo;
    for (int i = begin + 1; i < end; ++i) {
      const double v = features_(order_[i], d);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      axis = d;
    }
  }

  const int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](int a, int b) {
                     const double va = features_(a, axis);
                     const double vb = features_(b, axis);
                     if (va != vb) return va < vb;
                     return a < b;
                   });
  const double split = features_(order_[mid], axis);

  nodes_[node_id].axis = axis;
  nodes_[node_id].split = split;
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[node_id].left = left;
  nodes_[node_id].right = right;
  return node_id;
}

void NeighborIndex::search(int node_id,
                           const Eigen::Ref<const Eigen::VectorXd>& x,
                           int exclude, KnnHeap& heap) const {
  const Node& node = nodes_[node_id];
  if (node.axis < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int id = order_[i];
      if (id == exclude) continue;
      heap.offer((features_.row(id).transpose() - x).squaredNorm(), id);
    }
    return;
  }

  const double delta = x[node.axis] - node.split;
  const int near = delta < 0.0 ? node.left : node.right;
  const int far = delta < 0.0 ? node.right : node.left;
  search(near, x, exclude, heap);
  // Visit the far side unless the splitting plane is strictly farther than
  // the current worst candidate; on exact ties we must still descend so
  // that equal-distance points with lower ids can displace heap entries.
  if (!heap.full() || delta * delta <= heap.worst_dist2()) {
    search(far, x, exclude, heap);
  }
}

NeighborIndex::Result NeighborIndex::query(
    const Eigen::Ref<const Eigen::VectorXd>& x, int k,
    std::optional<int> exclude) const {
  if (x.size() != features_.cols()) {
    throw std::invalid_argument(
        "NeighborIndex::query: point has dimension " +
        std::to_string(x.size()) + ", index has " +
        std::to_string(features_.cols()));
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("NeighborIndex::query: point must be finite");
  }
  const int excl = exclude.value_or(-1);
  if (excl >= size()) {
    throw std::invalid_argument("NeighborIndex::query: exclude id " +
                                std::to_string(excl) + " out of range");
  }
  const int available = size() - (excl >= 0 ? 1 : 0);
  if (k < 1 || k > available) {
    throw std::invalid_argument(
        "NeighborIndex::query: k must lie in [1, " +
        std::to_string(available) + "], got " + std::to_string(k));
  }

  KnnHeap heap(k);
  if (brute_force_) {
    for (int id = 0; id < size(); ++id) {
      if (id == excl) continue;
      heap.offer((features_.row(id).transpose() - x).squaredNorm(), id);
    }
  } else {
    search(root_, x, excl, heap);
  }

  std::sort(heap.entries.begin(), heap.entries.end(),
            [](const Candidate& a, const Candidate& b) { return worse(b, a); });
  Result result;
  result.ids.reserve(k);
  result.distances.reserve(k);
  for (const Candidate& c : heap.entries) {
    result.ids.push_back(c.id);
    result.distances.push_back(std::sqrt(c.dist2));
  }
  return result;
}

}  // namespace covgp
