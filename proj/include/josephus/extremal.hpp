#pragma once

// Structure of the survivor function J_k: extremal points (where the
// value sits within k-1 of 1 or of n), the recurrences stepping from one
// such point to the next, closed forms on the linear segments in between,
// fixed-point enumeration, and point classification.
//
// High extremal points satisfy J_k(n) in [n-k+2, n]; low ones satisfy
// J_k(n) in [1, k-1].  Every fixed point J_k(n) = n is high extremal.
// Both chains are only defined from their first member at n = 2k-3 or
// n = 2k-2 onward; below that the function is probed directly.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "josephus/eval.hpp"

namespace josephus {

enum class extremal_kind { low, high, both };

struct extremal_point {
  int64_t n = 0;
  int64_t value = 0;
  extremal_kind kind = extremal_kind::high;
  bool is_fixed = false;
};

// Per-segment quantities around a high extremal point n_e:
//   j        J_k(n_e + 1), the value opening the next segment, in [1, k-1]
//   r        n_e mod (k-1)
//   delta    1 iff r < j - 1, computed from j
//   c        the same indicator computed straight from n_e and J_k(n_e)
//   m0       run length of the segment starting at n_e + 1
//   boundary n_e + 1 + m0, the next high extremal point
struct segment_geometry {
  int64_t j = 0;
  int64_t r = 0;
  int64_t delta = 0;
  int64_t c = 0;
  int64_t m0 = 0;
  int64_t boundary = 0;
};

namespace detail {

inline void require_k(int64_t k) {
  if (k < 2) throw std::domain_error("k must be >= 2");
}

inline void require_chain_start(const extremal_point& pt, int64_t k,
                                const char* who) {
  if (static_cast<__int128>(pt.n) < 2 * static_cast<__int128>(k) - 3)
    throw std::domain_error(std::string(who) +
                            ": point is below the start of the chain");
}

}  // namespace detail

inline segment_geometry segment_geometry_at(const extremal_point& pt,
                                            int64_t k) {
  detail::require_k(k);
  detail::require_chain_start(pt, k, "segment_geometry_at");
  if (pt.value > pt.n || pt.value < pt.n - k + 2)
    throw std::domain_error("segment_geometry_at: not a high extremal point");

  segment_geometry g;
  g.j = (k - 1) - (pt.n - pt.value);
  g.r = pt.n % (k - 1);
  g.delta = g.r < g.j - 1 ? 1 : 0;
  g.c = g.r < k - 2 - pt.n + pt.value ? 1 : 0;
  g.m0 = (pt.n - (g.j - 1)) / (k - 1);
  // boundary = (k*(n+1) - (r+1)) / (k-1) - delta; the division is exact
  // because n == r (mod k-1).
  const int64_t num = checked_sub(checked_mul(k, checked_add(pt.n, 1)), g.r + 1);
  g.boundary = num / (k - 1) - g.delta;
  return g;
}

// First member of the high chain: probe j = J_k(2k-2); the chain starts
// at (2k-3, j+k-2) when j <= k-1 and at (2k-2, j) otherwise.
inline extremal_point first_high_extremal(int64_t k) {
  detail::require_k(k);
  const int64_t j = detail::probe_chain_start(k);
  extremal_point pt;
  if (j <= k - 1) {
    pt.n = 2 * k - 3;
    pt.value = j + k - 2;
  } else {
    pt.n = 2 * k - 2;
    pt.value = j;
  }
  pt.kind = extremal_kind::high;
  pt.is_fixed = pt.value == pt.n;
  return pt;
}

inline extremal_point next_high_extremal(const extremal_point& pt, int64_t k) {
  const segment_geometry g = segment_geometry_at(pt, k);
  extremal_point nx;
  nx.n = g.boundary;
  nx.value = checked_add(g.j, checked_mul(k, g.m0));
  nx.kind = extremal_kind::high;
  nx.is_fixed = nx.value == nx.n;
  return nx;
}

// First member of the low chain, read off the same probe value as the
// high chain: (2k-2, j) when j <= k-1, else (2k-1, j-k+1).
inline extremal_point first_low_extremal(int64_t k) {
  detail::require_k(k);
  const int64_t j = detail::probe_chain_start(k);
  extremal_point pt;
  if (j <= k - 1) {
    pt.n = 2 * k - 2;
    pt.value = j;
  } else {
    pt.n = checked_sub(checked_mul(2, k), 1);
    pt.value = j - k + 1;
  }
  pt.kind = extremal_kind::low;
  pt.is_fixed = pt.value == pt.n;
  return pt;
}

inline extremal_point next_low_extremal(const extremal_point& pt, int64_t k) {
  detail::require_k(k);
  detail::require_chain_start(pt, k, "next_low_extremal");
  if (pt.value < 1 || pt.value > k - 1)
    throw std::domain_error("next_low_extremal: not a low extremal point");

  const int64_t r = pt.n % (k - 1);
  const int64_t c = r < pt.value ? 1 : 0;
  const int64_t kn = checked_mul(k, pt.n);  // (kn - r) is divisible by k-1
  extremal_point nx;
  nx.n = (kn - r) / (k - 1) - c + 1;
  nx.value = k - nx.n + pt.value + k * ((pt.n - pt.value) / (k - 1));
  nx.kind = extremal_kind::low;
  nx.is_fixed = nx.value == nx.n;
  return nx;
}

// J_k(n) for n on the segment ending at a known high extremal point:
// walking distance d = next_high.n - n costs k per seat.
inline int64_t value_on_segment(int64_t n, const extremal_point& next_high,
                                int64_t k) {
  detail::require_k(k);
  if (n < 1) throw std::domain_error("value_on_segment: n must be >= 1");
  if (n > next_high.n)
    throw std::domain_error("value_on_segment: n beyond the segment boundary");
  const int64_t v =
      checked_add(next_high.value, checked_mul(k, checked_sub(n, next_high.n)));
  if (v < 1)
    throw std::domain_error("value_on_segment: n below this segment");
  return v;
}

// Same idea anchored at a low extremal point: J_k(n) = k*n + value - (k-1)*n_low
// for n up to (but not including) the anchor, which opens a new linear run
// and carries its own value.
inline int64_t value_on_low_segment(int64_t n, const extremal_point& next_low,
                                    int64_t k) {
  detail::require_k(k);
  if (n < 1) throw std::domain_error("value_on_low_segment: n must be >= 1");
  if (n > next_low.n)
    throw std::domain_error("value_on_low_segment: n beyond the segment boundary");
  if (n == next_low.n) return next_low.value;
  const int64_t v = checked_sub(
      checked_add(checked_mul(k, n), next_low.value),
      checked_mul(k - 1, next_low.n));
  if (v < 1)
    throw std::domain_error("value_on_low_segment: n below this segment");
  return v;
}

// J_k(n_p + 1) straight after a fixed point n_p, by case analysis on how
// k sits relative to multiples of n_p + 1.  Verifies the fixed-point
// claim before answering.
inline int64_t value_after_fixed(int64_t np, int64_t k) {
  const params p{np, k};
  p.validate();
  if (eval_auto(p).value != np)
    throw std::domain_error("value_after_fixed: n is not a fixed point");
  if (k <= np + 1) return k - 1;
  const int64_t k1 = k % (np + 1);
  if (k1 == 1) return np + 1;
  if (k1 == 0) return np;
  return k1 - 1;  // k1 in [2, np]
}

// Lazy, copyable cursors over the two chains.  Copying forks the walk;
// advancing past the 64-bit range throws std::overflow_error.
class high_extremal_chain {
 public:
  explicit high_extremal_chain(int64_t k)
      : k_(k), cur_(first_high_extremal(k)) {}
  const extremal_point& current() const { return cur_; }
  void advance() { cur_ = next_high_extremal(cur_, k_); }
  int64_t k() const { return k_; }

 private:
  int64_t k_;
  extremal_point cur_;
};

class low_extremal_chain {
 public:
  explicit low_extremal_chain(int64_t k)
      : k_(k), cur_(first_low_extremal(k)) {}
  const extremal_point& current() const { return cur_; }
  void advance() { cur_ = next_low_extremal(cur_, k_); }
  int64_t k() const { return k_; }

 private:
  int64_t k_;
  extremal_point cur_;
};

inline std::vector<extremal_point> first_high_extremals(int64_t k,
                                                        std::size_t count) {
  std::vector<extremal_point> out;
  high_extremal_chain chain(k);
  while (out.size() < count) {
    out.push_back(chain.current());
    if (out.size() < count) chain.advance();
  }
  return out;
}

inline std::vector<extremal_point> high_extremals_up_to(int64_t k,
                                                        int64_t max_n) {
  std::vector<extremal_point> out;
  high_extremal_chain chain(k);
  while (chain.current().n <= max_n) {
    out.push_back(chain.current());
    chain.advance();
  }
  return out;
}

inline std::vector<extremal_point> first_low_extremals(int64_t k,
                                                       std::size_t count) {
  std::vector<extremal_point> out;
  low_extremal_chain chain(k);
  while (out.size() < count) {
    out.push_back(chain.current());
    if (out.size() < count) chain.advance();
  }
  return out;
}

inline std::vector<extremal_point> low_extremals_up_to(int64_t k,
                                                       int64_t max_n) {
  std::vector<extremal_point> out;
  low_extremal_chain chain(k);
  while (chain.current().n <= max_n) {
    out.push_back(chain.current());
    chain.advance();
  }
  return out;
}

// The first `count` fixed points of J_k in increasing order, optionally
// cut off at max_n (in which case fewer may come back).  Below the start
// of the high chain the recurrences do not apply, so that stretch is
// scanned directly with the one-step recurrence; from the chain start on,
// fixed points are exactly the chain members with value == n.
inline std::vector<int64_t> enumerate_fixed_points(
    int64_t k, std::size_t count, std::optional<int64_t> max_n = std::nullopt) {
  detail::require_k(k);
  std::vector<int64_t> out;
  if (count == 0) return out;

  const int64_t chain_floor =
      std::max<int64_t>(1, checked_sub(checked_mul(2, k), 4));
  int64_t scan_end = chain_floor;
  if (max_n) scan_end = std::min(scan_end, *max_n);

  int64_t pos = 1;
  for (int64_t m = 1; m <= scan_end && out.size() < count; ++m) {
    if (m > 1) pos = (pos + k - 1) % m + 1;  // pos = J_k(m)
    if (pos == m) out.push_back(m);
  }
  if (out.size() >= count || (max_n && *max_n <= chain_floor)) return out;

  high_extremal_chain chain(k);
  while (out.size() < count) {
    const extremal_point& pt = chain.current();
    if (max_n && pt.n > *max_n) break;
    if (pt.is_fixed && pt.n > chain_floor) out.push_back(pt.n);
    chain.advance();
  }
  return out;
}

// Where a point sits in the extremal landscape.  For n <= k-1 every value
// is both low and high; a fixed point is always reported together with
// its high side.
enum class point_kind { none, low, high, both };

struct classification {
  point_kind kind = point_kind::none;
  bool is_fixed = false;
};

inline classification classify(int64_t n, int64_t k) {
  const params p{n, k};
  p.validate();
  const bool chain_reached =
      static_cast<__int128>(n) >= 2 * static_cast<__int128>(k) - 3;
  const int64_t v =
      chain_reached ? eval_extremal(p).value : eval_knuth(p).value;
  const bool low = v <= k - 1;
  const bool high = v >= n - k + 2;
  classification c;
  c.is_fixed = v == n;
  if (low && high) c.kind = point_kind::both;
  else if (low) c.kind = point_kind::low;
  else if (high) c.kind = point_kind::high;
  return c;
}

inline std::string to_string(const classification& c) {
  std::string s;
  switch (c.kind) {
    case point_kind::none: s = "None"; break;
    case point_kind::low: s = "Low"; break;
    case point_kind::high: s = "High"; break;
    case point_kind::both: s = "Both"; break;
  }
  if (c.is_fixed) s = "Fixed+" + s;
  return s;
}

}  // namespace josephus
