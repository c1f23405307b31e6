#pragma once

// CSV persistence for benchmark records and profile curves.  Plain text,
// no quoting: integers in decimal, floating point with up to nine
// significant digits.

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "josephus/bench.hpp"

namespace josephus {

inline constexpr std::string_view bench_csv_header =
    "algorithm,n,k,time_ns,iterations,result";
inline constexpr std::string_view profile_csv_header = "algorithm,tau,fraction";

inline void write_records_csv(std::ostream& os,
                              const std::vector<bench_record>& records) {
  os << bench_csv_header << '\n';
  for (const auto& r : records)
    os << name(r.alg) << ',' << r.n << ',' << r.k << ',' << r.time_ns << ','
       << r.iterations << ',' << r.result << '\n';
}

inline void write_profiles_csv(std::ostream& os,
                               const std::vector<profile_curve>& curves) {
  os << profile_csv_header << '\n';
  char buf[64];
  for (const auto& c : curves)
    for (const auto& pt : c.points) {
      std::snprintf(buf, sizeof buf, "%.9g,%.9g", pt.tau, pt.fraction);
      os << name(c.alg) << ',' << buf << '\n';
    }
}

namespace detail {

template <class T>
inline T parse_int_field(std::string_view field, const char* what) {
  T out{};
  const auto* begin = field.data();
  const auto* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error(std::string("records csv: bad ") + what +
                             " field '" + std::string(field) + "'");
  return out;
}

}  // namespace detail

inline std::vector<bench_record> read_records_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("records csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != bench_csv_header)
    throw std::runtime_error("records csv: unexpected header '" + line + "'");

  std::vector<bench_record> out;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::string_view rest = line;
    std::string_view fields[6];
    for (int i = 0; i < 6; ++i) {
      const std::size_t comma = rest.find(',');
      if (i < 5) {
        if (comma == std::string_view::npos)
          throw std::runtime_error("records csv: expected 6 fields in '" +
                                   line + "'");
        fields[i] = rest.substr(0, comma);
        rest = rest.substr(comma + 1);
      } else {
        if (comma != std::string_view::npos)
          throw std::runtime_error("records csv: expected 6 fields in '" +
                                   line + "'");
        fields[i] = rest;
      }
    }

    bench_record r;
    const auto alg = algorithm_from_name(fields[0]);
    if (!alg)
      throw std::runtime_error("records csv: unknown algorithm '" +
                               std::string(fields[0]) + "'");
    r.alg = *alg;
    r.n = detail::parse_int_field<int64_t>(fields[1], "n");
    r.k = detail::parse_int_field<int64_t>(fields[2], "k");
    r.time_ns = detail::parse_int_field<uint64_t>(fields[3], "time_ns");
    r.iterations = detail::parse_int_field<uint64_t>(fields[4], "iterations");
    r.result = detail::parse_int_field<int64_t>(fields[5], "result");
    out.push_back(r);
  }
  return out;
}

}  // namespace josephus
