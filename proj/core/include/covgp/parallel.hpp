// Copyright (c) 2026 The covgp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace covgp {

/// Resolves a requested worker count: 0 means "hardware concurrency".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n) across up to n_threads workers. Work is
/// handed out in small chunks through an atomic cursor. The first exception
/// thrown by any worker is rethrown on the calling thread after join.
///
/// Callers are responsible for making fn(i) independent across i; results
/// written to per-index slots stay deterministic under any thread count.
inline void parallel_for(int n, const std::function<void(int)>& fn,
                         int n_threads = 0) {
  if (n <= 0) return;
  const int workers = std::min(resolve_threads(n_threads), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  constexpr int kChunk = 8;
  std::atomic<int> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      const int begin = cursor.fetch_add(kChunk);
      if (begin >= n) break;
      const int end = std::min(begin + kChunk, n);
      for (int i = begin; i < end; ++i) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace covgp
