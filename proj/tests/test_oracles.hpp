#pragma once

// Test-only reference implementations, deliberately written with different
// data structures and arithmetic than the library so that transcription
// mistakes cannot cancel out.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace testref {

// Counting-out survivor via rank arithmetic over a Fenwick tree: the
// victim's rank among the alive seats is computed directly and the seat
// recovered by an order-statistics descend.  Independent of the library's
// successor-ring walk.
class fenwick_circle {
 public:
  explicit fenwick_circle(std::int64_t n)
      : n_(n), log2_(0), tree_(static_cast<std::size_t>(n) + 1, 0) {
    while ((std::int64_t{1} << (log2_ + 1)) <= n_) ++log2_;
    for (std::int64_t i = 1; i <= n_; ++i) tree_[static_cast<std::size_t>(i)] = i & -i;
  }

  void remove(std::int64_t seat) {
    for (; seat <= n_; seat += seat & -seat) --tree_[static_cast<std::size_t>(seat)];
  }

  // The target-th alive seat, 1-based.
  std::int64_t select(std::int64_t target) const {
    std::int64_t idx = 0;
    for (std::int64_t bit = std::int64_t{1} << log2_; bit > 0; bit >>= 1) {
      const std::int64_t nxt = idx + bit;
      if (nxt <= n_ && tree_[static_cast<std::size_t>(nxt)] < target) {
        idx = nxt;
        target -= tree_[static_cast<std::size_t>(nxt)];
      }
    }
    return idx + 1;
  }

 private:
  std::int64_t n_;
  int log2_;
  std::vector<std::int64_t> tree_;
};

inline std::vector<std::int64_t> elimination_order(std::int64_t n,
                                                   std::int64_t k) {
  fenwick_circle circle(n);
  std::vector<std::int64_t> order;
  order.reserve(static_cast<std::size_t>(n));
  std::int64_t alive = n;
  std::int64_t cursor = 0;  // 0-based rank where counting starts
  while (alive > 1) {
    const std::int64_t rank = (cursor + k - 1) % alive;
    const std::int64_t seat = circle.select(rank + 1);
    circle.remove(seat);
    order.push_back(seat);
    --alive;
    cursor = rank % alive;
  }
  order.push_back(circle.select(1));
  return order;
}

inline std::int64_t survivor(std::int64_t n, std::int64_t k) {
  fenwick_circle circle(n);
  std::int64_t alive = n;
  std::int64_t cursor = 0;
  while (alive > 1) {
    const std::int64_t rank = (cursor + k - 1) % alive;
    circle.remove(circle.select(rank + 1));
    --alive;
    cursor = rank % alive;
  }
  return circle.select(1);
}

// One recurrence step read literally off its interval form: find the l >= 0
// with p + k in [l*(n+1) + 1, (l+1)*(n+1)] and return p + k - l*(n+1).
inline std::int64_t euler_step_interval_form(std::int64_t p, std::int64_t n,
                                             std::int64_t k) {
  for (std::int64_t l = 0;; ++l) {
    const std::int64_t lo = l * (n + 1) + 1;
    const std::int64_t hi = (l + 1) * (n + 1);
    if (p + k >= lo && p + k <= hi) return p + k - l * (n + 1);
  }
}

// Iteration-count growth allowance for the logarithmic evaluators.
inline std::uint64_t doubling_allowance(std::int64_t k) {
  const double ratio = static_cast<double>(k) / static_cast<double>(k - 1);
  return static_cast<std::uint64_t>(std::ceil(std::log(2.0) / std::log(ratio))) + 2;
}

}  // namespace testref
