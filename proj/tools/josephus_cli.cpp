// Command-line front end for the survivor-position library.
//
//   josephus eval --n <int> --k <int> [--alg euler|knuth|uchiyama|extremal|closed2|auto]
//   josephus simulate --n <int> --k <int> [--trace]
//   josephus extremals --k <int> [--kind high|low] [--limit <count>|--max-n <int>]
//   josephus fixed-points --k <int> --count <int> [--max-n <int>]
//   josephus classify --n <int> --k <int>
//   josephus verify --n-max <int> --k-max <int> [--jobs <int>]
//   josephus bench --n-range a:s:b --k-range a:s:b --algs <csv> --reps <int> --out <path> [--jobs <int>]
//   josephus profile --in <path> --out <path>
//   josephus export --k <int> --n-max <int> [--out <path>]
//
// Exit status: 0 on success, 1 on a computation error (domain violation,
// overflow, mismatch), 2 on a usage error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "josephus/josephus.hpp"

namespace {

using josephus::int64_t;

// Flag combinations that are wrong before any computation starts.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

josephus::range_spec parse_range(const std::string& text, const char* flag) {
  josephus::range_spec r;
  std::string_view rest = text;
  int64_t* fields[3] = {&r.start, &r.step, &r.stop};
  for (int i = 0; i < 3; ++i) {
    const std::size_t colon = rest.find(':');
    const std::string_view field =
        i < 2 ? rest.substr(0, colon) : rest;
    if ((i < 2) != (colon != std::string_view::npos))
      throw usage_error(std::string(flag) + ": expected start:step:stop");
    const auto* begin = field.data();
    const auto* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, *fields[i]);
    if (ec != std::errc{} || ptr != end || field.empty())
      throw usage_error(std::string(flag) + ": '" + std::string(field) +
                        "' is not an integer");
    if (i < 2) rest = rest.substr(colon + 1);
  }
  return r;
}

std::vector<josephus::algorithm> parse_algs(const std::string& text) {
  std::vector<josephus::algorithm> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    const auto alg = josephus::algorithm_from_name(tok);
    if (!alg)
      throw usage_error("--algs: unknown algorithm '" + std::string(tok) +
                        "' (expected euler, knuth, uchiyama, extremal)");
    out.push_back(*alg);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (out.empty()) throw usage_error("--algs: no algorithms given");
  return out;
}

int do_eval(int64_t n, int64_t k, const std::string& alg) {
  const josephus::params p{n, k};
  josephus::eval_result r;
  if (alg == "auto") r = josephus::eval_auto(p);
  else if (alg == "euler") r = josephus::eval_euler(p);
  else if (alg == "knuth") r = josephus::eval_knuth(p);
  else if (alg == "uchiyama") r = josephus::eval_uchiyama(p);
  else if (alg == "extremal") r = josephus::eval_extremal(p);
  else if (alg == "closed2") {
    if (k != 2) throw usage_error("--alg closed2 requires --k 2");
    p.validate();
    r = josephus::eval_closed_k2(n);
  } else {
    throw usage_error("--alg: unknown algorithm '" + alg + "'");
  }
  std::cout << r.value << "\n";
  return 0;
}

int do_simulate(int64_t n, int64_t k, bool trace) {
  const auto res = josephus::simulate_elimination({n, k}, trace);
  if (trace) {
    const auto& order = res.trace->order;
    for (std::size_t i = 0; i < order.size(); ++i)
      std::cout << (i ? " " : "") << order[i];
    std::cout << "\n";
  }
  std::cout << res.survivor << "\n";
  return 0;
}

void print_points(const std::vector<josephus::extremal_point>& pts) {
  for (const auto& pt : pts) {
    std::cout << pt.n << " " << pt.value;
    if (pt.is_fixed) std::cout << " fixed";
    std::cout << "\n";
  }
}

int do_extremals(int64_t k, const std::string& kind, bool has_limit,
                 std::size_t limit, bool has_max_n, int64_t max_n) {
  if (!has_limit && !has_max_n) {
    has_limit = true;
    limit = 10;
  }
  std::vector<josephus::extremal_point> pts;
  if (kind == "high")
    pts = has_limit ? josephus::first_high_extremals(k, limit)
                    : josephus::high_extremals_up_to(k, max_n);
  else
    pts = has_limit ? josephus::first_low_extremals(k, limit)
                    : josephus::low_extremals_up_to(k, max_n);
  print_points(pts);
  return 0;
}

int do_fixed_points(int64_t k, std::size_t count, bool has_max_n,
                    int64_t max_n) {
  std::optional<int64_t> bound;
  if (has_max_n) bound = max_n;
  const auto pts = josephus::enumerate_fixed_points(k, count, bound);
  for (std::size_t i = 0; i < pts.size(); ++i)
    std::cout << (i ? " " : "") << pts[i];
  std::cout << "\n";
  if (pts.size() < count)
    std::cerr << "bound reached: found " << pts.size() << " of " << count
              << "\n";
  return 0;
}

int do_classify(int64_t n, int64_t k) {
  std::cout << josephus::to_string(josephus::classify(n, k)) << "\n";
  return 0;
}

int do_verify(int64_t n_max, int64_t k_max, int jobs) {
  if (n_max < 1) throw usage_error("--n-max must be >= 1");
  if (k_max < 2) throw usage_error("--k-max must be >= 2");
  if (jobs < 1) throw usage_error("--jobs must be >= 1");

  struct mismatch {
    int64_t n, k;
    std::string alg;
    int64_t got, want;
  };
  std::mutex mu;
  std::optional<mismatch> worst;  // smallest (k, n) mismatch found
  std::atomic<bool> failed{false};

  auto check_k = [&](std::size_t ki) {
    const int64_t k = 2 + static_cast<int64_t>(ki);
    for (int64_t n = 1; n <= n_max && !failed.load(); ++n) {
      const josephus::params p{n, k};
      const int64_t want = josephus::simulate_elimination(p).survivor;
      const std::pair<const char*, int64_t> got[] = {
          {"euler", josephus::eval_euler(p).value},
          {"knuth", josephus::eval_knuth(p).value},
          {"uchiyama", josephus::eval_uchiyama(p).value},
          {"extremal", josephus::eval_extremal(p).value},
          {"auto", josephus::eval_auto(p).value},
          {"closed2", k == 2 ? josephus::eval_closed_k2(n).value : want},
      };
      for (const auto& [alg, value] : got) {
        if (value != want) {
          std::lock_guard<std::mutex> lk(mu);
          if (!worst || k < worst->k || (k == worst->k && n < worst->n))
            worst = mismatch{n, k, alg, value, want};
          failed.store(true);
          return;
        }
      }
    }
  };

  josephus::detail::for_each_index(static_cast<std::size_t>(k_max - 1), jobs,
                                   check_k);
  if (worst) {
    std::cerr << "MISMATCH n=" << worst->n << " k=" << worst->k
              << " algorithm=" << worst->alg << " got=" << worst->got
              << " want=" << worst->want << "\n";
    return 1;
  }
  std::cout << "OK cells=" << n_max * (k_max - 1) << "\n";
  return 0;
}

int do_bench(const std::string& n_range, const std::string& k_range,
             const std::string& algs, int reps, const std::string& out_path,
             int jobs) {
  josephus::grid_spec spec;
  spec.n_range = parse_range(n_range, "--n-range");
  spec.k_range = parse_range(k_range, "--k-range");
  spec.algorithms = parse_algs(algs);
  spec.repetitions = reps;
  spec.jobs = jobs;

  const auto records = josephus::run_grid(spec);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  josephus::write_records_csv(out, records);
  if (!out.flush())
    throw std::runtime_error("failed writing '" + out_path + "'");

  const std::size_t cells =
      records.size() / spec.algorithms.size();
  std::cout << "cells=" << cells << " records=" << records.size() << "\n";
  for (const auto& [alg, s] : josephus::summarize(records))
    std::cout << josephus::name(alg) << ": min=" << s.min_ns
              << "ns mean=" << s.mean_ns << "ns max=" << s.max_ns
              << "ns std=" << s.stddev_ns << "ns\n";
  return 0;
}

int do_profile(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open '" + in_path + "'");
  const auto records = josephus::read_records_csv(in);
  const auto curves = josephus::performance_profile(records);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  josephus::write_profiles_csv(out, curves);
  if (!out.flush())
    throw std::runtime_error("failed writing '" + out_path + "'");
  return 0;
}

int do_export(int64_t k, int64_t n_max, const std::string& out_path) {
  if (n_max < 1) throw usage_error("--n-max must be >= 1");
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    os = &file;
  }
  for (int64_t n = 1; n <= n_max; ++n)
    *os << n << ',' << josephus::eval_auto({n, k}).value << '\n';
  os->flush();
  if (!*os) throw std::runtime_error("failed writing output");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Survivor positions of the counting-out game"};
  app.require_subcommand(1);

  int64_t n = 0, k = 0, max_n = 0, n_max = 0, k_max = 0;
  std::size_t limit = 0, count = 0;
  int jobs = 1, reps = 0;
  bool trace = false;
  std::string alg = "auto", kind = "high";
  std::string n_range, k_range, algs, in_path, out_path;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the survivor position");
  eval_cmd->add_option("--n", n)->required();
  eval_cmd->add_option("--k", k)->required();
  eval_cmd->add_option("--alg", alg)
      ->check(CLI::IsMember(
          {"euler", "knuth", "uchiyama", "extremal", "closed2", "auto"}));

  auto* sim_cmd =
      app.add_subcommand("simulate", "Run the elimination process directly");
  sim_cmd->add_option("--n", n)->required();
  sim_cmd->add_option("--k", k)->required();
  sim_cmd->add_flag("--trace", trace, "Also print the elimination order");

  auto* ext_cmd =
      app.add_subcommand("extremals", "List extremal points of one chain");
  ext_cmd->add_option("--k", k)->required();
  ext_cmd->add_option("--kind", kind)->check(CLI::IsMember({"high", "low"}));
  auto* limit_opt = ext_cmd->add_option("--limit", limit, "Number of points");
  auto* maxn_opt = ext_cmd->add_option("--max-n", max_n, "Largest n to list");
  limit_opt->excludes(maxn_opt);
  maxn_opt->excludes(limit_opt);

  auto* fix_cmd = app.add_subcommand("fixed-points", "List fixed points");
  fix_cmd->add_option("--k", k)->required();
  fix_cmd->add_option("--count", count)->required();
  auto* fix_maxn = fix_cmd->add_option("--max-n", max_n, "Search bound");

  auto* cls_cmd = app.add_subcommand("classify", "Classify a point");
  cls_cmd->add_option("--n", n)->required();
  cls_cmd->add_option("--k", k)->required();

  auto* ver_cmd = app.add_subcommand(
      "verify", "Check every evaluator against the simulator");
  ver_cmd->add_option("--n-max", n_max)->required();
  ver_cmd->add_option("--k-max", k_max)->required();
  ver_cmd->add_option("--jobs", jobs);

  auto* bench_cmd = app.add_subcommand("bench", "Time evaluators on a grid");
  bench_cmd->add_option("--n-range", n_range, "start:step:stop")->required();
  bench_cmd->add_option("--k-range", k_range, "start:step:stop")->required();
  bench_cmd->add_option("--algs", algs, "Comma-separated algorithm list")
      ->required();
  bench_cmd->add_option("--reps", reps, "Timed repetitions per cell")
      ->required();
  bench_cmd->add_option("--out", out_path, "Records CSV path")->required();
  bench_cmd->add_option("--jobs", jobs);

  auto* prof_cmd = app.add_subcommand(
      "profile", "Turn a records CSV into performance profiles");
  prof_cmd->add_option("--in", in_path)->required();
  prof_cmd->add_option("--out", out_path)->required();

  auto* exp_cmd =
      app.add_subcommand("export", "Emit n,value rows for one k");
  exp_cmd->add_option("--k", k)->required();
  exp_cmd->add_option("--n-max", n_max)->required();
  exp_cmd->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return do_eval(n, k, alg);
    if (sim_cmd->parsed()) return do_simulate(n, k, trace);
    if (ext_cmd->parsed())
      return do_extremals(k, kind, limit_opt->count() > 0, limit,
                          maxn_opt->count() > 0, max_n);
    if (fix_cmd->parsed())
      return do_fixed_points(k, count, fix_maxn->count() > 0, max_n);
    if (cls_cmd->parsed()) return do_classify(n, k);
    if (ver_cmd->parsed()) return do_verify(n_max, k_max, jobs);
    if (bench_cmd->parsed())
      return do_bench(n_range, k_range, algs, reps, out_path, jobs);
    if (prof_cmd->parsed()) return do_profile(in_path, out_path);
    if (exp_cmd->parsed()) return do_export(k, n_max, out_path);
    std::cerr << "error: no command\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
