#pragma once

// Brute-force elimination: n seats in a circle, counting starts at seat 1,
// every k-th person is removed, and the last seat standing wins.  This is
// the ground truth the fast evaluators are checked against, so it walks
// the circle literally instead of using any closed form.

#include <optional>
#include <vector>

#include "josephus/types.hpp"

namespace josephus {

struct elimination_trace {
  // Seats in removal order; a permutation of [1, n] whose last entry is
  // the survivor.
  std::vector<int64_t> order;
};

struct simulation_result {
  int64_t survivor = 0;
  std::optional<elimination_trace> trace;
};

// Successor-ring walk.  Each round advances (k-1) mod alive seats from the
// current counting start and unlinks the seat reached; whole laps are
// skipped because they change nothing.  O(n * min(k, n)) time, O(n) space,
// so the caller decides how large an n is still reasonable.
inline simulation_result simulate_elimination(const params& p,
                                              bool want_trace = false) {
  p.validate();
  const int64_t n = p.n;
  const int64_t k = p.k;

  simulation_result res;
  if (want_trace) {
    res.trace.emplace();
    res.trace->order.reserve(static_cast<std::size_t>(n));
  }
  if (n == 1) {
    res.survivor = 1;
    if (res.trace) res.trace->order.push_back(1);
    return res;
  }

  // next[s] is the alive seat clockwise after seat s; prev trails the seat
  // the next count starts at.
  std::vector<int64_t> next(static_cast<std::size_t>(n) + 1);
  for (int64_t s = 1; s < n; ++s) next[static_cast<std::size_t>(s)] = s + 1;
  next[static_cast<std::size_t>(n)] = 1;

  int64_t prev = n;
  int64_t alive = n;
  while (alive > 1) {
    const int64_t skip = (k - 1) % alive;
    for (int64_t s = 0; s < skip; ++s) prev = next[static_cast<std::size_t>(prev)];
    const int64_t victim = next[static_cast<std::size_t>(prev)];
    next[static_cast<std::size_t>(prev)] = next[static_cast<std::size_t>(victim)];
    if (res.trace) res.trace->order.push_back(victim);
    --alive;
  }

  res.survivor = next[static_cast<std::size_t>(prev)];
  if (res.trace) res.trace->order.push_back(res.survivor);
  return res;
}

}  // namespace josephus
