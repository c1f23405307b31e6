#pragma once

// Interchangeable evaluators of the survivor position J_k(n), from the
// O(n) one-step recurrence up to the O(log n) walk along the chain of
// high extremal points, plus the single-step and multi-step recurrence
// primitives they are built from.  Every evaluator reports how many loop
// steps it took alongside the value.

#include <bit>
#include <optional>
#include <string_view>

#include "josephus/types.hpp"

namespace josephus {

// One step of the survivor recurrence: given p = J_k(n), returns
// J_k(n+1), which is the unique value in [1, n+1] congruent to
// p + k modulo n + 1.
inline int64_t euler_step(int64_t p, int64_t n, int64_t k) {
  if (n < 1) throw std::domain_error("euler_step: n must be >= 1");
  if (k < 2) throw std::domain_error("euler_step: k must be >= 2");
  if (p < 1 || p > n) throw std::domain_error("euler_step: p outside [1, n]");
  const auto m = static_cast<__int128>(n) + 1;
  return static_cast<int64_t>((static_cast<__int128>(p) + k - 1) % m + 1);
}

// Multi-step jump: from p = J_k(n) straight to J_k(n+m).  Valid while the
// whole stretch stays on one linear piece (p + km <= n + m), or when m is
// exactly the first step that leaves it; anything farther is refused
// because a single wrap-around correction no longer suffices.
inline int64_t jump(int64_t p, int64_t n, int64_t k, int64_t m) {
  if (n < 1) throw std::domain_error("jump: n must be >= 1");
  if (k < 2) throw std::domain_error("jump: k must be >= 2");
  if (p < 1 || p > n) throw std::domain_error("jump: p outside [1, n]");
  if (m < 1) throw std::domain_error("jump: m must be >= 1");

  const int64_t target = checked_add(p, checked_mul(k, m));
  const int64_t horizon = checked_add(n, m);
  if (target <= horizon) return target;

  const int64_t first_violation = (n - p) / (k - 1) + 1;
  if (m != first_violation)
    throw std::domain_error("jump: m lands beyond the first wrap-around");
  return target - horizon;
}

// O(n) evaluation by folding euler_step from J_k(1) = 1 upward.
// Always performs exactly n - 1 steps.
inline eval_result eval_euler(const params& p) {
  p.ensure_headroom();
  eval_result r;
  int64_t pos = 1;
  for (int64_t m = 1; m < p.n; ++m) {
    pos = (pos + p.k - 1) % (m + 1) + 1;  // fits: pos + k <= n + k < k(n+1)
    ++r.iterations;
  }
  r.value = pos;
  return r;
}

// O(log n) evaluation via the D-sequence: grow D from 1 by
// D <- ceil(k*D/(k-1)) until D > (k-1)*n, then J_k(n) = k*n + 1 - D.
// The update is computed as D + ceil(D/(k-1)) to stay inside 64 bits.
inline eval_result eval_knuth(const params& p) {
  p.ensure_headroom();
  const int64_t n = p.n;
  const int64_t k = p.k;
  const int64_t limit = (k - 1) * n;  // fits: (k-1)*n < k*(n+1)
  eval_result r;
  int64_t d = 1;
  while (d <= limit) {
    d += (d + k - 2) / (k - 1);
    ++r.iterations;
  }
  r.value = k * n + 1 - d;
  return r;
}

// Closed form for k = 2: J_2(n) = 2*(n - 2^floor(log2 n)) + 1.  Written
// subtraction-first so no intermediate can overflow.
inline eval_result eval_closed_k2(int64_t n) {
  if (n < 1) throw std::domain_error("eval_closed_k2: n must be >= 1");
  const auto h = static_cast<int64_t>(std::bit_floor(static_cast<uint64_t>(n)));
  return {2 * (n - h) + 1, 0};
}

// O(log n) evaluation through the sequence n_1 < n_2 < ... of interval
// ends with companion constants c_i = J_k(n_i + 1): advance
//   n_{i+1} = floor((k*(n_i+1) - c_i) / (k-1)),
//   c_{i+1} = the representative of c_i + (k-1)(n_{i+1}+1) - k(n_i+1)
//             modulo n_{i+1}+1 lying in [1, n_{i+1}+1],
// and once n_i < n <= n_{i+1}, read off J_k(n) = c_i + k*(n - n_i - 1).
inline eval_result eval_uchiyama(const params& p) {
  p.ensure_headroom();
  const int64_t n = p.n;
  const int64_t k = p.k;
  eval_result r;
  if (n == 1) {
    r.value = 1;
    return r;
  }

  int64_t ni = 1;
  int64_t c = (k % 2 == 0) ? 1 : 2;  // J_k(2)
  for (;;) {
    // With t = n_i + 1:  k*t - c = (k-1)*t + (t - c), so the quotient is
    // t + (t-c)/(k-1) and the raw next constant is (k-1) - remainder.
    const int64_t t = ni + 1;
    const int64_t q = (t - c) / (k - 1);
    const int64_t rem = (t - c) % (k - 1);
    const int64_t ni1 = t + q;
    ++r.iterations;
    if (n <= ni1) {
      r.value = c + k * (n - ni - 1);
      return r;
    }
    int64_t cs = (k - 1) - rem;
    if (cs > ni1 + 1) cs = (cs - 1) % (ni1 + 1) + 1;
    ni = ni1;
    c = cs;
  }
}

namespace detail {

// J_k(2k-2), the probe value both chain walks start from, by folding the
// one-step recurrence across ring sizes 2..2k-2.  Below size k the count
// can lap the ring more than once, so those steps reduce with a real
// modulus; from size k up it wraps at most once (pos <= size - 1, so
// pos + k - 1 < 2*size) and a compare-and-subtract replaces the
// division.  Total cost is 2k-3 steps, about half of them division-free;
// the D-sequence would need about k*ln(2k^2) steps to reach this value.
// Unsigned intermediates: pos + k stays below 2^64 for every k whose
// doubled value fits in a signed 64-bit integer.
inline int64_t probe_chain_start(int64_t k) {
  const auto top = static_cast<uint64_t>(checked_sub(checked_mul(2, k), 2));
  const auto uk = static_cast<uint64_t>(k);
  uint64_t pos = 1;
  uint64_t size = 2;
  for (; size < uk && size <= top; ++size) pos = (pos + uk - 1) % size + 1;
  for (; size <= top; ++size) {
    const uint64_t u = pos + uk - 1;
    pos = (u >= size ? u - size : u) + 1;
  }
  return static_cast<int64_t>(pos);
}

}  // namespace detail

// O(log n) evaluation by walking the chain of high extremal points (the
// n_e where J_k(n_e) lies within k-1 of n_e).  Between consecutive chain
// points the function is linear with slope k, so once the chain passes n
// the answer is read off the covering segment.  Each chain step uses the
// segment run length m0 = floor(n_e / (k-1)) - [r < j-1] where
// r = n_e mod (k-1) and j = J_k(n_e + 1):
//   n_e   <- n_e + 1 + m0
//   J(n_e) <- j + k*m0
// Inputs below the first chain point fall back to eval_knuth.
inline eval_result eval_extremal(const params& p) {
  p.ensure_headroom();
  const int64_t n = p.n;
  const int64_t k = p.k;

  // The chain starts at 2k-3 or 2k-2; anything below it is out of reach.
  if (static_cast<__int128>(n) <= 2 * static_cast<__int128>(k) - 4)
    return eval_knuth(p);

  const int64_t j0 = detail::probe_chain_start(k);
  int64_t ne, jne;
  if (j0 <= k - 1) {
    ne = 2 * k - 3;
    jne = j0 + k - 2;
  } else {
    ne = 2 * k - 2;
    jne = j0;
  }
  if (n < ne) return eval_knuth(p);

  eval_result r;
  // Each step advances by m0 + 1 = q + 1 - delta, where q and rem split
  // ne as q*(k-1) + rem and delta = [rem < j - 1].  Two reformulations
  // keep the loop body cheap without changing a single value or step:
  //   - the gap g = ne - J_k(ne) stays in [0, k-2] on the high chain and
  //     steps by g' = g + rem + 1 - (k-1)*(1 - delta), with j - 1 equal
  //     to k - 2 - g, so J_k(ne) = ne - g is only materialized at exit;
  //   - while q < k - 1 the advance is below k - 1, so (q, rem) can be
  //     carried forward with one compare-and-subtract instead of a fresh
  //     division.  Once q reaches k - 1 the loop falls through to the
  //     dividing form.
  int64_t q = ne / (k - 1);
  int64_t rem = ne % (k - 1);
  int64_t g = ne - jne;
  while (ne < n && q < k - 1) {
    const bool delta = rem < k - 2 - g;
    g += rem + 1 - (delta ? 0 : k - 1);
    const int64_t inc = q + 1 - (delta ? 1 : 0);
    ne += inc;
    rem += inc;
    if (rem >= k - 1) {
      rem -= k - 1;
      ++q;
    }
    ++r.iterations;
  }
  while (ne < n) {
    q = ne / (k - 1);
    rem = ne % (k - 1);
    const bool delta = rem < k - 2 - g;
    g += rem + 1 - (delta ? 0 : k - 1);
    ne += q + 1 - (delta ? 1 : 0);
    ++r.iterations;
  }
  jne = ne - g;
  r.value = jne + k * (n - ne);  // n <= ne: walk back down the segment
  return r;
}

// Picks a sensible evaluator: the closed form for k = 2, the extremal
// chain once n reaches its starting point, eval_knuth otherwise.
inline eval_result eval_auto(const params& p) {
  p.validate();
  if (p.k == 2) return eval_closed_k2(p.n);
  if (static_cast<__int128>(p.n) >= 2 * static_cast<__int128>(p.k) - 3)
    return eval_extremal(p);
  return eval_knuth(p);
}

// The four general-k evaluators, in cost order, as benchmarkable units.
enum class algorithm { euler, knuth, uchiyama, extremal };

inline constexpr std::string_view name(algorithm a) {
  switch (a) {
    case algorithm::euler: return "euler";
    case algorithm::knuth: return "knuth";
    case algorithm::uchiyama: return "uchiyama";
    case algorithm::extremal: return "extremal";
  }
  return "?";
}

inline std::optional<algorithm> algorithm_from_name(std::string_view s) {
  if (s == "euler") return algorithm::euler;
  if (s == "knuth") return algorithm::knuth;
  if (s == "uchiyama") return algorithm::uchiyama;
  if (s == "extremal") return algorithm::extremal;
  return std::nullopt;
}

inline eval_result evaluate(algorithm a, const params& p) {
  switch (a) {
    case algorithm::euler: return eval_euler(p);
    case algorithm::knuth: return eval_knuth(p);
    case algorithm::uchiyama: return eval_uchiyama(p);
    case algorithm::extremal: return eval_extremal(p);
  }
  throw std::domain_error("evaluate: unknown algorithm");
}

}  // namespace josephus
