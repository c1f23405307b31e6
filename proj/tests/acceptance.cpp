// Acceptance gate: eight end-to-end checks, one PASS/FAIL line each.
// Exits nonzero if any check fails.  All value comparisons are exact; the
// only tolerances are the wall-clock budgets and the strict inequalities
// on benchmark means, both pinned right here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "josephus/josephus.hpp"

namespace {

using josephus::algorithm;
using josephus::int64_t;
using josephus::params;

struct outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first reason
    pass = false;
  }
};

int hardware_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Upper bound on how many more iterations a logarithmic evaluator may take
// at 2n than at n: the chain advances n by a factor k/(k-1) per step.
std::uint64_t doubling_allowance(int64_t k) {
  const long double steps =
      std::log(2.0L) / std::log(static_cast<long double>(k) /
                                static_cast<long double>(k - 1));
  return static_cast<std::uint64_t>(std::ceil(steps)) + 2;
}

// ---------------------------------------------------------------------------
// 1. Every evaluator agrees with the elimination simulator on the full
//    sweep n in [1, 2000], k in [2, 64].
outcome check_agreement_sweep() {
  outcome out;
  std::mutex mu;
  std::optional<std::pair<int64_t, int64_t>> first_bad;
  std::string bad_detail;

  josephus::detail::for_each_index(63, hardware_jobs(), [&](std::size_t ki) {
    const int64_t k = 2 + static_cast<int64_t>(ki);
    for (int64_t n = 1; n <= 2000; ++n) {
      const params p{n, k};
      const int64_t want = josephus::simulate_elimination(p).survivor;
      const std::pair<const char*, int64_t> got[] = {
          {"euler", josephus::eval_euler(p).value},
          {"knuth", josephus::eval_knuth(p).value},
          {"uchiyama", josephus::eval_uchiyama(p).value},
          {"extremal", josephus::eval_extremal(p).value},
          {"auto", josephus::eval_auto(p).value},
          {"closed2", k == 2 ? josephus::eval_closed_k2(n).value : want},
      };
      for (const auto& [alg, value] : got)
        if (value != want) {
          std::lock_guard<std::mutex> lk(mu);
          if (!first_bad || std::pair(k, n) < *first_bad) {
            first_bad = {k, n};
            bad_detail = std::string(alg) + " gave " + std::to_string(value) +
                         " instead of " + std::to_string(want) + " at n=" +
                         std::to_string(n) + ", k=" + std::to_string(k);
          }
          return;
        }
    }
  });
  if (first_bad) out.fail(bad_detail);
  return out;
}

// ---------------------------------------------------------------------------
// 2. The first seven fixed points for k = 2..12 and 15 (84 values).
outcome check_fixed_point_table() {
  outcome out;
  struct column {
    int64_t k;
    std::vector<int64_t> fixed;
  };
  const column expected[] = {
      {2, {1, 3, 7, 15, 31, 63, 127}},
      {3, {1, 2, 13, 20, 46, 157, 236}},
      {4, {1, 21, 38, 51, 122, 163, 689}},
      {5, {1, 2, 46, 542, 2587, 3234, 6317}},
      {6, {1, 20, 51, 794, 953, 17629, 21155}},
      {7, {1, 2, 3, 12, 68, 274, 593}},
      {8, {1, 3, 13, 15, 26, 1276, 1905}},
      {9, {1, 2, 7, 8, 15, 17, 375}},
      {10, {1, 4, 475, 8177, 11217, 28954, 126567}},
      {11, {1, 2, 4, 5, 49, 54, 188}},
      {12, {1, 10, 11, 19, 55, 111, 290}},
      {15, {1, 2, 52, 388, 1899, 30003, 136887}},
  };
  for (const auto& col : expected) {
    const auto got = josephus::enumerate_fixed_points(col.k, 7);
    if (got != col.fixed) {
      std::string s = "k=" + std::to_string(col.k) + " gave [";
      for (std::size_t i = 0; i < got.size(); ++i)
        s += (i ? " " : "") + std::to_string(got[i]);
      out.fail(s + "]");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. k = 2: the closed form matches the two chain-based evaluators for
//    n <= 10^6, and the chains are exactly 2^i - 1 and 2^i for i <= 40.
outcome check_k2_identities() {
  outcome out;
  for (int64_t n = 1; n <= 1000000; ++n) {
    const int64_t closed = josephus::eval_closed_k2(n).value;
    const int64_t knuth = josephus::eval_knuth({n, 2}).value;
    const int64_t extremal = josephus::eval_extremal({n, 2}).value;
    if (closed != knuth || closed != extremal) {
      out.fail("n=" + std::to_string(n) + ": closed=" + std::to_string(closed) +
               " knuth=" + std::to_string(knuth) +
               " extremal=" + std::to_string(extremal));
      break;
    }
  }
  const auto highs = josephus::first_high_extremals(2, 40);
  const auto lows = josephus::first_low_extremals(2, 40);
  for (std::size_t i = 0; i < 40; ++i) {
    const int64_t pow2 = int64_t{1} << (i + 1);
    if (highs[i].n != pow2 - 1 || highs[i].value != pow2 - 1 ||
        !highs[i].is_fixed)
      out.fail("high chain member " + std::to_string(i + 1) + " is " +
               std::to_string(highs[i].n) + ", expected " +
               std::to_string(pow2 - 1));
    if (lows[i].n != pow2 || lows[i].value != 1)
      out.fail("low chain member " + std::to_string(i + 1) + " is " +
               std::to_string(lows[i].n) + ", expected " +
               std::to_string(pow2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 4. For k in {3, 10}: simulated differences J(n) - J(n-1) equal k exactly
//    where n-1 is not high extremal (read off the simulated values), and
//    the segment closed form reproduces the simulator everywhere the chain
//    covers, for n <= 10^4.
outcome check_piecewise_linearity() {
  outcome out;
  for (const int64_t k : {int64_t{3}, int64_t{10}}) {
    const int64_t n_max = 10000;
    std::vector<int64_t> table(static_cast<std::size_t>(n_max) + 1);
    for (int64_t n = 1; n <= n_max; ++n)
      table[static_cast<std::size_t>(n)] =
          josephus::simulate_elimination({n, k}).survivor;

    for (int64_t n = 2; n <= n_max; ++n) {
      const int64_t prev = table[static_cast<std::size_t>(n - 1)];
      const bool after_high = prev >= (n - 1) - k + 2;
      const bool slope_k =
          table[static_cast<std::size_t>(n)] - prev == k;
      if (slope_k == after_high) {
        out.fail("k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                 ": difference " +
                 std::to_string(table[static_cast<std::size_t>(n)] - prev) +
                 (after_high ? " right after a high extremal point"
                             : " away from any high extremal point"));
        return out;
      }
    }

    const auto highs = josephus::high_extremals_up_to(k, 2 * n_max + 2 * k);
    std::size_t hi = 0;
    for (int64_t n = highs.front().n; n <= n_max; ++n) {
      while (highs[hi].n < n) ++hi;
      const int64_t v = josephus::value_on_segment(n, highs[hi], k);
      if (v != table[static_cast<std::size_t>(n)]) {
        out.fail("k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                 ": segment value " + std::to_string(v) + " vs simulated " +
                 std::to_string(table[static_cast<std::size_t>(n)]));
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 5. The seat after a high extremal point classifies Low across the sweep;
//    the seat after a fixed point n_p carries k-1 whenever k <= n_p + 1;
//    and k = 9 has the consecutive fixed points 7 and 8.
outcome check_alternation_and_after_fixed() {
  outcome out;
  for (int64_t k = 2; k <= 64; ++k) {
    for (const auto& pt : josephus::high_extremals_up_to(k, 2000)) {
      const auto c = josephus::classify(pt.n + 1, k);
      if (c.kind != josephus::point_kind::low) {
        out.fail("k=" + std::to_string(k) + ": classify(" +
                 std::to_string(pt.n + 1) + ") is not Low after the high point " +
                 std::to_string(pt.n));
        return out;
      }
    }
    for (const int64_t np : josephus::enumerate_fixed_points(k, 2000, 2000)) {
      if (k > np + 1) continue;
      const int64_t after = josephus::eval_auto({np + 1, k}).value;
      if (after != k - 1) {
        out.fail("k=" + std::to_string(k) + ": value after the fixed point " +
                 std::to_string(np) + " is " + std::to_string(after) +
                 ", expected " + std::to_string(k - 1));
        return out;
      }
      if (josephus::value_after_fixed(np, k) != after) {
        out.fail("k=" + std::to_string(k) +
                 ": value_after_fixed disagrees at " + std::to_string(np));
        return out;
      }
    }
  }
  const auto nine = josephus::enumerate_fixed_points(9, 4);
  if (!(nine.size() == 4 && nine[2] == 7 && nine[3] == 8))
    out.fail("k=9 did not yield the consecutive fixed points 7, 8");
  return out;
}

// ---------------------------------------------------------------------------
// 6. The three logarithmic evaluators agree on twelve-to-fifteen digit
//    inputs without overflowing.
outcome check_large_inputs() {
  outcome out;
  for (const int64_t n : {int64_t{1000000000000}, int64_t{1000000000000000}})
    for (const int64_t k : {int64_t{3}, int64_t{50}, int64_t{1000}}) {
      try {
        const int64_t a = josephus::eval_knuth({n, k}).value;
        const int64_t b = josephus::eval_uchiyama({n, k}).value;
        const int64_t c = josephus::eval_extremal({n, k}).value;
        if (a != b || a != c) {
          out.fail("n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                   ": knuth=" + std::to_string(a) + " uchiyama=" +
                   std::to_string(b) + " extremal=" + std::to_string(c));
          return out;
        }
      } catch (const std::exception& e) {
        out.fail("n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                 " raised: " + e.what());
        return out;
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Cost counters: the O(n) evaluator reports exactly n-1 steps on every
//    grid cell, and doubling n costs each logarithmic evaluator at most
//    ceil(log 2 / log(k/(k-1))) + 2 extra steps.
outcome check_iteration_counters() {
  outcome out;
  const auto ns = josephus::range_spec{50000, 1000, 100000}.values();
  const auto ks = josephus::range_spec{50, 50, 1000}.values();

  for (const int64_t n : ns) {
    const auto r = josephus::eval_euler({n, ks.front()});
    if (r.iterations != static_cast<std::uint64_t>(n - 1)) {
      out.fail("euler took " + std::to_string(r.iterations) + " steps at n=" +
               std::to_string(n) + ", expected " + std::to_string(n - 1));
      return out;
    }
  }

  for (const int64_t k : ks) {
    const std::uint64_t allowance = doubling_allowance(k);
    for (const int64_t n : ns)
      for (const algorithm alg :
           {algorithm::knuth, algorithm::uchiyama, algorithm::extremal}) {
        const std::uint64_t at_n = josephus::evaluate(alg, {n, k}).iterations;
        const std::uint64_t at_2n =
            josephus::evaluate(alg, {2 * n, k}).iterations;
        if (at_2n > at_n + allowance) {
          out.fail(std::string(josephus::name(alg)) + " grew from " +
                   std::to_string(at_n) + " to " + std::to_string(at_2n) +
                   " steps between n=" + std::to_string(n) + " and 2n, over "
                   "the allowance " + std::to_string(allowance) +
                   " at k=" + std::to_string(k));
          return out;
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 8. Desk-scale benchmark: mean per-cell median times order
//    extremal < uchiyama < knuth < euler, the extremal curve owns the
//    largest fraction at ratio 1, and euler averages at least 10x the
//    extremal time.
outcome check_benchmark_ordering() {
  outcome out;
  josephus::grid_spec spec;
  spec.n_range = {50000, 1000, 100000};
  spec.k_range = {50, 50, 1000};
  spec.algorithms = {algorithm::euler, algorithm::knuth, algorithm::uchiyama,
                     algorithm::extremal};
  spec.repetitions = 5;

  const auto records = josephus::run_grid(spec);
  const auto stats = josephus::summarize(records);
  const double t_euler = stats.at(algorithm::euler).mean_ns;
  const double t_knuth = stats.at(algorithm::knuth).mean_ns;
  const double t_uchiyama = stats.at(algorithm::uchiyama).mean_ns;
  const double t_extremal = stats.at(algorithm::extremal).mean_ns;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "means: extremal=%.0fns uchiyama=%.0fns knuth=%.0fns "
                "euler=%.0fns",
                t_extremal, t_uchiyama, t_knuth, t_euler);
  out.detail = buf;

  if (!(t_extremal < t_uchiyama && t_uchiyama < t_knuth && t_knuth < t_euler))
    out.fail(std::string("mean ordering violated; ") + buf);
  if (t_euler / t_extremal < 10.0)
    out.fail("euler/extremal mean ratio " +
             std::to_string(t_euler / t_extremal) + " is below 10");

  const auto curves = josephus::performance_profile(records);
  double best_fraction = -1.0;
  double extremal_fraction = -1.0;
  for (const auto& c : curves) {
    const double at_one = c.points.front().fraction;  // first tau is 1
    if (c.alg == algorithm::extremal) extremal_fraction = at_one;
    else best_fraction = std::max(best_fraction, at_one);
  }
  if (!(extremal_fraction > best_fraction))
    out.fail("extremal fraction at ratio 1 is " +
             std::to_string(extremal_fraction) +
             ", not above the best contender's " +
             std::to_string(best_fraction));
  return out;
}

struct criterion {
  const char* title;
  outcome (*run)();
  double budget_seconds;  // 0 means no wall-clock requirement
};

}  // namespace

int main() {
  const criterion criteria[] = {
      {"evaluators match the simulator for n<=2000, k<=64", check_agreement_sweep, 120.0},
      {"first seven fixed points for k=2..12,15", check_fixed_point_table, 10.0},
      {"k=2 closed form and doubling chains", check_k2_identities, 0.0},
      {"slope-k linearity between high points (k=3,10)", check_piecewise_linearity, 0.0},
      {"alternation after high and fixed points", check_alternation_and_after_fixed, 0.0},
      {"log evaluators agree at n=10^12..10^15", check_large_inputs, 1.0},
      {"euler counts n-1 steps; log growth bounded", check_iteration_counters, 0.0},
      {"benchmark ordering and profile dominance", check_benchmark_ordering, 600.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_seconds > 0.0 && secs >= c.budget_seconds)
      out.fail("took " + std::to_string(secs) + "s, budget " +
               std::to_string(c.budget_seconds) + "s");

    std::printf("%s  %zu  %-52s  %7.2fs%s%s\n", out.pass ? "PASS" : "FAIL",
                i + 1, c.title, secs, out.detail.empty() ? "" : "  -- ",
                out.detail.c_str());
    if (!out.pass) ++failures;
  }

  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", std::size(criteria));
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failures,
              std::size(criteria));
  return 1;
}
