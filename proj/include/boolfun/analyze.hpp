#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boolfun/boolean_function.hpp"
#include "boolfun/coincident.hpp"
#include "boolfun/metrics.hpp"
#include "boolfun/mobius.hpp"

namespace boolfun {

enum class Metric { weight, degree, balanced, nl, ci1, coincident, monotonic };

inline const std::vector<Metric>& all_metrics() {
  static const std::vector<Metric> all = {
      Metric::weight, Metric::degree,     Metric::balanced, Metric::nl,
      Metric::ci1,    Metric::coincident, Metric::monotonic};
  return all;
}

inline const char* metric_name(Metric m) {
  switch (m) {
    case Metric::weight: return "weight";
    case Metric::degree: return "degree";
    case Metric::balanced: return "balanced";
    case Metric::nl: return "nl";
    case Metric::ci1: return "ci1";
    case Metric::coincident: return "coincident";
    case Metric::monotonic: return "monotonic";
  }
  return "?";
}

inline Metric metric_from_string(std::string_view s) {
  for (Metric m : all_metrics())
    if (s == metric_name(m)) return m;
  throw std::invalid_argument("unknown metric: " + std::string(s));
}

/// Parse a comma-separated metric list; empty input means every metric.
inline std::vector<Metric> parse_metrics(std::string_view csv) {
  if (csv.empty()) return all_metrics();
  std::vector<Metric> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    out.push_back(metric_from_string(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

/// One computed metric. Degree of the zero function is reported as a
/// dedicated minus-infinity value, never as a number.
struct MetricValue {
  enum class Kind { integer, boolean, neg_infinity } kind;
  std::int64_t num = 0;
};

inline MetricValue metric_value(const BooleanFunction& f, Metric m) {
  switch (m) {
    case Metric::weight:
      return {MetricValue::Kind::integer,
              static_cast<std::int64_t>(weight(f))};
    case Metric::degree: {
      const auto d = degree(anf_of(f));
      if (!d) return {MetricValue::Kind::neg_infinity, 0};
      return {MetricValue::Kind::integer, *d};
    }
    case Metric::balanced:
      return {MetricValue::Kind::boolean, is_balanced(f)};
    case Metric::nl:
      return {MetricValue::Kind::integer, nonlinearity(f)};
    case Metric::ci1:
      return {MetricValue::Kind::boolean, correlation_immune_1(f)};
    case Metric::coincident:
      return {MetricValue::Kind::boolean, is_coincident(f)};
    case Metric::monotonic:
      return {MetricValue::Kind::boolean, is_monotonic(f, Direction::up)};
  }
  throw std::invalid_argument("unknown metric");
}

inline std::string metric_csv_value(const BooleanFunction& f, Metric m) {
  const MetricValue v = metric_value(f, m);
  if (v.kind == MetricValue::Kind::neg_infinity) return "-inf";
  return std::to_string(v.num);
}

}  // namespace boolfun
