#pragma once

// Benchmark harness for the evaluators: time a grid of (n, k) cells with
// one untimed warmup and a median over repeated calls, cross-check that
// every algorithm returns the same survivor per cell, summarize, and turn
// the records into ratio-to-best performance profiles.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "josephus/eval.hpp"

namespace josephus {

struct disagreement_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inclusive arithmetic progression start, start+step, ..., <= stop.
struct range_spec {
  int64_t start = 0;
  int64_t step = 1;
  int64_t stop = 0;

  void validate(const char* what) const {
    if (step < 1)
      throw std::domain_error(std::string(what) + ": step must be >= 1");
    if (start > stop)
      throw std::domain_error(std::string(what) + ": start must be <= stop");
  }

  std::vector<int64_t> values() const {
    std::vector<int64_t> out;
    for (int64_t v = start; v <= stop; v = checked_add(v, step)) {
      out.push_back(v);
      if (v > stop - step) break;  // next += step would pass stop (or wrap)
    }
    return out;
  }
};

struct grid_spec {
  range_spec n_range;
  range_spec k_range;
  std::vector<algorithm> algorithms;
  int repetitions = 1;
  // Cap on the total number of O(n) recurrence steps the grid may spend in
  // eval_euler (warmup included); grids that would exceed it are refused.
  uint64_t euler_step_budget = 50'000'000'000ULL;
  int jobs = 1;

  void validate() const {
    n_range.validate("n-range");
    k_range.validate("k-range");
    if (n_range.start < 1) throw std::domain_error("n-range: start must be >= 1");
    if (k_range.start < 2) throw std::domain_error("k-range: start must be >= 2");
    if (algorithms.empty())
      throw std::domain_error("grid: at least one algorithm required");
    for (std::size_t i = 0; i < algorithms.size(); ++i)
      for (std::size_t j = i + 1; j < algorithms.size(); ++j)
        if (algorithms[i] == algorithms[j])
          throw std::domain_error("grid: duplicate algorithm");
    if (repetitions < 1)
      throw std::domain_error("grid: repetitions must be >= 1");
    if (jobs < 1) throw std::domain_error("grid: jobs must be >= 1");
  }
};

struct bench_record {
  algorithm alg{};
  int64_t n = 0;
  int64_t k = 0;
  uint64_t time_ns = 0;    // median over the timed repetitions
  uint64_t iterations = 0;
  int64_t result = 0;      // identical across algorithms per (n, k)
};

namespace detail {

template <class T>
inline void do_not_optimize(const T& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r,m"(value) : "memory");
#else
  volatile T sink = value;
  (void)sink;
#endif
}

inline uint64_t median_ns(std::vector<uint64_t>& v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  if (v.size() % 2 == 1) return v[m];
  return (v[m - 1] + v[m]) / 2;
}

// Runs fn(0..count-1) on up to `jobs` threads; the first exception wins.
template <class Fn>
inline void for_each_index(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lk(error_mu);
          if (!error) error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };
  const int nthreads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

using evaluator_fn = std::function<eval_result(algorithm, const params&)>;

// Test seam: run the grid against an arbitrary dispatcher.
inline std::vector<bench_record> run_grid_with(const grid_spec& spec,
                                               const evaluator_fn& eval_fn) {
  spec.validate();
  const std::vector<int64_t> ns = spec.n_range.values();
  const std::vector<int64_t> ks = spec.k_range.values();

  const bool has_euler =
      std::find(spec.algorithms.begin(), spec.algorithms.end(),
                algorithm::euler) != spec.algorithms.end();
  if (has_euler) {
    unsigned __int128 total = 0;
    for (int64_t n : ns)
      total += static_cast<unsigned __int128>(n - 1) * ks.size() *
               (static_cast<unsigned>(spec.repetitions) + 1u);
    if (total > spec.euler_step_budget)
      throw budget_error(
          "grid: the O(n) evaluator would need " +
          std::to_string(static_cast<double>(total)) +
          " recurrence steps, over the budget of " +
          std::to_string(spec.euler_step_budget) +
          "; drop euler from the algorithm list or shrink the n-range");
  }

  struct cell {
    int64_t n, k;
  };
  std::vector<cell> cells;
  cells.reserve(ns.size() * ks.size());
  for (int64_t n : ns)
    for (int64_t k : ks) cells.push_back({n, k});

  std::vector<std::vector<bench_record>> slots(cells.size());

  detail::for_each_index(cells.size(), spec.jobs, [&](std::size_t idx) {
    const params pr{cells[idx].n, cells[idx].k};
    auto& out = slots[idx];
    out.reserve(spec.algorithms.size());
    for (algorithm alg : spec.algorithms) {
      const eval_result warm = eval_fn(alg, pr);  // untimed warmup
      detail::do_not_optimize(warm.value);
      std::vector<uint64_t> times(static_cast<std::size_t>(spec.repetitions));
      for (auto& slot : times) {
        const auto t0 = std::chrono::steady_clock::now();
        const eval_result er = eval_fn(alg, pr);
        const auto t1 = std::chrono::steady_clock::now();
        detail::do_not_optimize(er.value);
        if (er.value != warm.value)
          throw disagreement_error(
              "results disagree at n=" + std::to_string(pr.n) +
              ", k=" + std::to_string(pr.k) + ": " + std::string(name(alg)) +
              " returned " + std::to_string(warm.value) + " then " +
              std::to_string(er.value));
        slot = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                .count());
      }
      out.push_back({alg, pr.n, pr.k, detail::median_ns(times),
                     warm.iterations, warm.value});
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (out[i].result != out[0].result)
        throw disagreement_error(
            "results disagree at n=" + std::to_string(pr.n) +
            ", k=" + std::to_string(pr.k) + ": " +
            std::string(name(out[0].alg)) + " returned " +
            std::to_string(out[0].result) + " but " +
            std::string(name(out[i].alg)) + " returned " +
            std::to_string(out[i].result));
    }
  });

  std::vector<bench_record> records;
  records.reserve(cells.size() * spec.algorithms.size());
  for (auto& s : slots)
    for (auto& r : s) records.push_back(r);
  std::sort(records.begin(), records.end(),
            [](const bench_record& a, const bench_record& b) {
              if (a.alg != b.alg) return a.alg < b.alg;
              if (a.n != b.n) return a.n < b.n;
              return a.k < b.k;
            });
  return records;
}

inline std::vector<bench_record> run_grid(const grid_spec& spec) {
  return run_grid_with(
      spec, [](algorithm a, const params& p) { return evaluate(a, p); });
}

struct summary_stats {
  uint64_t min_ns = 0;
  uint64_t max_ns = 0;
  double mean_ns = 0.0;
  double stddev_ns = 0.0;  // population standard deviation
  std::size_t count = 0;
};

inline std::map<algorithm, summary_stats> summarize(
    const std::vector<bench_record>& records) {
  if (records.empty())
    throw std::invalid_argument("summarize: no records");
  std::map<algorithm, std::vector<uint64_t>> by_alg;
  for (const auto& r : records) by_alg[r.alg].push_back(r.time_ns);

  std::map<algorithm, summary_stats> out;
  for (auto& [alg, times] : by_alg) {
    summary_stats s;
    s.count = times.size();
    s.min_ns = *std::min_element(times.begin(), times.end());
    s.max_ns = *std::max_element(times.begin(), times.end());
    double sum = 0.0;
    for (uint64_t t : times) sum += static_cast<double>(t);
    s.mean_ns = sum / static_cast<double>(times.size());
    double sq = 0.0;
    for (uint64_t t : times) {
      const double d = static_cast<double>(t) - s.mean_ns;
      sq += d * d;
    }
    s.stddev_ns = std::sqrt(sq / static_cast<double>(times.size()));
    out.emplace(alg, s);
  }
  return out;
}

struct profile_point {
  double tau = 1.0;
  double fraction = 0.0;
};

struct profile_curve {
  algorithm alg{};
  std::vector<profile_point> points;
};

// Ratio-to-best profiles: per cell, each algorithm's time divided by the
// cell's fastest time; each curve gives the fraction of cells at ratio
// <= tau, sampled at every distinct ratio in the record set.  Every
// algorithm must cover every cell.
inline std::vector<profile_curve> performance_profile(
    const std::vector<bench_record>& records) {
  if (records.empty())
    throw std::invalid_argument("performance_profile: no records");

  std::map<std::pair<int64_t, int64_t>, std::map<algorithm, uint64_t>> cells;
  std::vector<algorithm> algs;
  for (const auto& r : records) {
    if (!cells[{r.n, r.k}].emplace(r.alg, r.time_ns).second)
      throw std::invalid_argument(
          "performance_profile: duplicate record for " +
          std::string(name(r.alg)) + " at n=" + std::to_string(r.n) +
          ", k=" + std::to_string(r.k));
    if (std::find(algs.begin(), algs.end(), r.alg) == algs.end())
      algs.push_back(r.alg);
  }
  std::sort(algs.begin(), algs.end());

  std::map<algorithm, std::vector<double>> ratios;
  std::vector<double> taus;
  for (const auto& [key, by_alg] : cells) {
    uint64_t best = 0;
    for (algorithm a : algs) {
      const auto it = by_alg.find(a);
      if (it == by_alg.end())
        throw std::invalid_argument(
            "performance_profile: missing record for " +
            std::string(name(a)) + " at n=" + std::to_string(key.first) +
            ", k=" + std::to_string(key.second));
      const uint64_t t = std::max<uint64_t>(1, it->second);
      best = best == 0 ? t : std::min(best, t);
    }
    for (algorithm a : algs) {
      const uint64_t t = std::max<uint64_t>(1, by_alg.at(a));
      const double ratio = static_cast<double>(t) / static_cast<double>(best);
      ratios[a].push_back(ratio);
      taus.push_back(ratio);
    }
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  std::vector<profile_curve> curves;
  const double total = static_cast<double>(cells.size());
  for (algorithm a : algs) {
    auto& rs = ratios[a];
    std::sort(rs.begin(), rs.end());
    profile_curve curve;
    curve.alg = a;
    curve.points.reserve(taus.size());
    std::size_t covered = 0;
    for (double tau : taus) {
      while (covered < rs.size() && rs[covered] <= tau) ++covered;
      curve.points.push_back({tau, static_cast<double>(covered) / total});
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace josephus
