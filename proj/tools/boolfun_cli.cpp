// Command line front end: sampling, transforming, analyzing, and censusing
// Boolean functions, plus the self-check suite. Exit codes: 0 success, 1
// verification failure, 2 usage or input errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolfun/boolfun.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned jobs = boolfun::default_jobs();
  bool json = false;
  bool long_mode = false;
  std::string output;

  std::uint64_t resolve_seed() {
    if (!seed_given) {
      std::random_device rd;
      seed = (std::uint64_t{rd()} << 32) ^ rd();
      seed_given = true;
    }
    return seed;
  }
};

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) {
      os_ = &std::cout;
    } else {
      file_.open(path, std::ios::trunc);
      if (!file_)
        throw std::invalid_argument("cannot open output file: " + path);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

struct InputLine {
  std::size_t number;
  std::string text;
};

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Data lines from a file or stdin; blank lines and '#' comments skipped so
/// command output can be piped straight back in.
std::vector<InputLine> read_input_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    in = &file;
  }
  std::vector<InputLine> lines;
  std::string raw;
  for (std::size_t num = 1; std::getline(*in, raw); ++num) {
    const std::string t = trimmed(raw);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back({num, t});
  }
  return lines;
}

std::vector<boolfun::BooleanFunction> parse_functions(
    const std::vector<InputLine>& lines) {
  std::vector<boolfun::BooleanFunction> fs;
  fs.reserve(lines.size());
  for (const auto& line : lines) {
    try {
      fs.push_back(boolfun::function_from_hex(line.text));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(line.number) +
                                  ": " + e.what());
    }
  }
  return fs;
}

std::string fmt(double v, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// --- gen --------------------------------------------------------------------

int cmd_gen(const std::string& kind, int n, std::uint64_t count,
            GlobalOpts& g) {
  OutputTarget out(g.output);
  const std::uint64_t seed = g.resolve_seed();
  out.stream() << "# seed=" << seed << '\n';
  boolfun::Rng rng = boolfun::seeded_rng(seed);
  if (kind == "coincident-symmetric") {
    for (std::uint64_t i = 0; i < count; ++i)
      out.stream() << boolfun::to_lambda_string(
                          boolfun::random_coincident_symmetric(n, rng))
                   << '\n';
    return 0;
  }
  const boolfun::Population pop = boolfun::population_from_string(kind);
  for (std::uint64_t i = 0; i < count; ++i)
    out.stream() << boolfun::to_hex(boolfun::sample_function(pop, n, rng))
                 << '\n';
  return 0;
}

// --- mobius -----------------------------------------------------------------

int cmd_mobius(const std::string& input, bool trace, GlobalOpts& g) {
  OutputTarget out(g.output);
  const auto fs = parse_functions(read_input_lines(input));
  for (const auto& f : fs) {
    if (trace) {
      const auto layers = boolfun::transform_layers(f);
      for (std::size_t i = 0; i < layers.size(); ++i)
        out.stream() << "# layer " << (i + 1) << ": "
                     << boolfun::to_hex(layers[i]) << '\n';
    }
    out.stream() << boolfun::to_hex(boolfun::transform(f)) << '\n';
  }
  return 0;
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& input, const std::string& metrics_csv,
                GlobalOpts& g) {
  const auto metrics = boolfun::parse_metrics(metrics_csv);
  OutputTarget out(g.output);
  const auto fs = parse_functions(read_input_lines(input));
  if (g.json) {
    for (const auto& f : fs) {
      ordered_json row;
      row["function"] = boolfun::to_hex(f);
      row["n"] = f.vars();
      for (const auto m : metrics) {
        const auto v = boolfun::metric_value(f, m);
        switch (v.kind) {
          case boolfun::MetricValue::Kind::integer:
            row[boolfun::metric_name(m)] = v.num;
            break;
          case boolfun::MetricValue::Kind::boolean:
            row[boolfun::metric_name(m)] = bool(v.num);
            break;
          case boolfun::MetricValue::Kind::neg_infinity:
            row[boolfun::metric_name(m)] = nullptr;
            break;
        }
      }
      out.stream() << row.dump() << '\n';
    }
    return 0;
  }
  out.stream() << "function,n";
  for (const auto m : metrics) out.stream() << ',' << boolfun::metric_name(m);
  out.stream() << '\n';
  for (const auto& f : fs) {
    out.stream() << boolfun::to_hex(f) << ',' << f.vars();
    for (const auto m : metrics)
      out.stream() << ',' << boolfun::metric_csv_value(f, m);
    out.stream() << '\n';
  }
  return 0;
}

// --- ci-table ---------------------------------------------------------------

int cmd_ci_table(int n_max, const std::string& checkpoint, GlobalOpts& g) {
  const auto rows =
      boolfun::ci_table(n_max, g.long_mode, g.jobs, &std::cerr, checkpoint);
  std::ostringstream text;
  text << "CI(1) census of coincident functions\n";
  text << std::left << std::setw(4) << "n" << std::setw(40) << "weight:count"
       << std::right << std::setw(8) << "total" << std::setw(12) << "cor_1"
       << '\n';
  for (const auto& row : rows) {
    std::ostringstream wc;
    for (std::size_t i = 0; i < row.weight_counts.size(); ++i) {
      if (i) wc << ' ';
      wc << row.weight_counts[i].first << ':' << row.weight_counts[i].second;
    }
    text << std::left << std::setw(4) << row.n << std::setw(40) << wc.str()
         << std::right << std::setw(8) << row.total << std::setw(12);
    if (row.cor1)
      text << *row.cor1;
    else
      text << "-";
    text << '\n';
  }
  std::cout << text.str();
  if (!g.output.empty()) {
    OutputTarget out(g.output);
    out.stream() << "# boolfun ci-table n_max=" << n_max
                 << " long=" << (g.long_mode ? 1 : 0) << '\n';
    out.stream() << "n,weight,count,total,cor1\n";
    for (const auto& row : rows)
      for (const auto& [w, c] : row.weight_counts) {
        out.stream() << row.n << ',' << w << ',' << c << ',' << row.total
                     << ',';
        if (row.cor1) out.stream() << *row.cor1;
        out.stream() << '\n';
      }
  }
  return 0;
}

// --- dist -------------------------------------------------------------------

int cmd_dist(const std::string& kind, int n, std::uint64_t samples,
             const std::string& population, unsigned bins, GlobalOpts& g) {
  using boolfun::Population;
  std::vector<Population> pops;
  if (population == "both")
    pops = {Population::coincident, Population::uniform};
  else
    pops = {boolfun::population_from_string(population)};
  const bool both = pops.size() == 2;

  OutputTarget out(g.output);
  const std::uint64_t seed = g.resolve_seed();
  auto& os = out.stream();
  os << "# boolfun dist kind=" << kind << " n=" << n << " samples=" << samples
     << " seed=" << seed << " population=" << population;
  if (kind == "weight") os << " bins=" << bins;
  os << '\n';

  const auto header_counts = [&](const char* prefix) {
    for (const auto p : pops) os << ',' << prefix << population_name(p);
    os << '\n';
  };

  if (kind == "weight") {
    std::vector<std::vector<std::uint64_t>> values;
    for (const auto p : pops) {
      // distinct seed per population; a shared stream would correlate them
      const std::uint64_t s = boolfun::splitmix64(seed + std::uint64_t(p));
      values.push_back(
          boolfun::sample_weights(p, n, samples, s, g.jobs));
    }
    if (both) {
      const auto ks = boolfun::ks_two_sample(values[0], values[1]);
      os << "# ks_d=" << fmt(ks.d) << " ks_p=" << fmt(ks.p_value, "%.6g")
         << '\n';
    }
    const std::uint64_t hi = (std::uint64_t{1} << n) + 1;
    std::vector<boolfun::BinnedCounts> binned;
    for (const auto& v : values)
      binned.push_back(boolfun::bin_counts(v, 0, hi, bins));
    os << "bin_lo,bin_hi,weight_mid_normalized";
    header_counts("count_");
    const auto& shape = binned[0];
    const double half = double(std::uint64_t{1} << (n - 1));
    for (std::size_t i = 0; i < shape.counts.size(); ++i) {
      const std::uint64_t lo = i * shape.step;
      const std::uint64_t hi_row = std::min(hi, lo + shape.step);
      os << lo << ',' << hi_row << ','
         << fmt((double(lo) + double(hi_row - 1)) / 2.0 / half);
      for (const auto& b : binned) os << ',' << b.counts[i];
      os << '\n';
    }
    return 0;
  }

  if (kind == "nl") {
    std::vector<std::vector<std::int64_t>> values;
    for (const auto p : pops) {
      const std::uint64_t s = boolfun::splitmix64(seed + std::uint64_t(p));
      values.push_back(
          boolfun::sample_nonlinearities(p, n, samples, s, g.jobs));
    }
    if (both) {
      const auto ks = boolfun::ks_two_sample(values[0], values[1]);
      os << "# ks_d=" << fmt(ks.d) << " ks_p=" << fmt(ks.p_value, "%.6g")
         << '\n';
    }
    std::int64_t lo = values[0][0], hi = values[0][0];
    for (const auto& v : values)
      for (const auto x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    os << "value";
    header_counts("count_");
    for (std::int64_t x = lo; x <= hi; ++x) {
      os << x;
      for (const auto& v : values) {
        std::uint64_t c = 0;
        for (const auto y : v) c += (y == x);
        os << ',' << c;
      }
      os << '\n';
    }
    return 0;
  }

  if (kind == "degree") {
    std::vector<std::vector<double>> profiles;
    for (const auto p : pops) {
      const std::uint64_t s = boolfun::splitmix64(seed + std::uint64_t(p));
      profiles.push_back(
          boolfun::mean_degree_profile(p, n, samples, s, g.jobs));
    }
    os << "degree";
    header_counts("mean_");
    for (int d = 0; d <= n; ++d) {
      os << d;
      for (const auto& prof : profiles) os << ',' << fmt(prof[d]);
      os << '\n';
    }
    return 0;
  }

  if (kind == "balanced") {
    os << "population,balanced,samples,fraction\n";
    for (const auto p : pops) {
      const std::uint64_t s = boolfun::splitmix64(seed + std::uint64_t(p));
      const std::uint64_t c =
          boolfun::count_balanced_samples(p, n, samples, s, g.jobs);
      os << population_name(p) << ',' << c << ',' << samples << ','
         << fmt(double(c) / double(samples)) << '\n';
    }
    return 0;
  }

  throw std::invalid_argument("unknown dist kind: " + kind);
}

// --- enum-cs ----------------------------------------------------------------

int cmd_enum_cs(int n, GlobalOpts& g) {
  OutputTarget out(g.output);
  std::uint64_t count = 0;
  boolfun::for_each_coincident_symmetric(
      n, [&](const boolfun::LambdaVector& l) {
        out.stream() << boolfun::to_lambda_string(l) << '\n';
        ++count;
      });
  out.stream() << "# count=" << count << '\n';
  if (count != boolfun::coincident_symmetric_count(n)) {
    std::cerr << "error: enumeration found " << count << " solutions, "
              << "expected " << boolfun::coincident_symmetric_count(n) << '\n';
    return 1;
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& level, GlobalOpts& g) {
  const std::uint64_t seed = g.resolve_seed();
  OutputTarget out(g.output);
  const auto checks = boolfun::run_verify(level == "full", seed, g.jobs);
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (c.ok) {
      ++passed;
      out.stream() << "[ ok ] " << c.name << '\n';
    } else {
      out.stream() << "[FAIL] " << c.name;
      if (!c.detail.empty()) out.stream() << " -- " << c.detail;
      out.stream() << '\n';
    }
  }
  out.stream() << "verify: " << passed << '/' << checks.size()
               << " checks passed (level=" << level << ", seed=" << seed
               << ")\n";
  return passed == checks.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean functions under the binary Mobius transform"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed (default: random)")
      ->each([&g](const std::string&) { g.seed_given = true; });
  app.add_option("--jobs", g.jobs, "worker threads for bulk runs");
  app.add_flag("--json", g.json, "JSON lines instead of CSV where applicable");
  app.add_flag("--long", g.long_mode, "enable the expensive exhaustive runs");
  app.add_option("--output", g.output, "write primary output to a file");

  std::string gen_kind;
  int gen_n = 0;
  std::uint64_t gen_count = 1;
  auto* gen = app.add_subcommand("gen", "sample functions, one per line");
  gen->fallthrough();
  gen->add_option("kind", gen_kind, "uniform|coincident|coincident-symmetric")
      ->required()
      ->check(CLI::IsMember({"uniform", "coincident", "coincident-symmetric"}));
  gen->add_option("--n", gen_n, "variable count")->required();
  gen->add_option("--count", gen_count, "number of samples");

  std::string mob_input;
  bool mob_trace = false;
  auto* mob = app.add_subcommand("mobius", "transform hex lines");
  mob->fallthrough();
  mob->add_option("--input", mob_input, "input file (default: stdin)");
  mob->add_flag("--trace", mob_trace, "dump each butterfly layer as comments");

  std::string an_input, an_metrics;
  auto* an = app.add_subcommand("analyze", "per-function metrics as CSV");
  an->fallthrough();
  an->add_option("--input", an_input, "input file (default: stdin)");
  an->add_option("--metrics", an_metrics,
                 "comma list: weight,degree,balanced,nl,ci1,coincident,"
                 "monotonic (default: all)");

  int ci_n_max = 5;
  std::string ci_checkpoint = "cor1-n5.checkpoint";
  auto* ci = app.add_subcommand("ci-table",
                                "CI(1) census over the coincident space");
  ci->fallthrough();
  ci->add_option("--n-max", ci_n_max, "largest n (<= 5)");
  ci->add_option("--checkpoint", ci_checkpoint,
                 "checkpoint file for the 2^32 sweep");

  std::string dist_kind, dist_pop = "both";
  int dist_n = 0;
  std::uint64_t dist_samples = 1000;
  unsigned dist_bins = 64;
  auto* dist = app.add_subcommand("dist", "sampled distribution tables");
  dist->fallthrough();
  dist->add_option("kind", dist_kind, "weight|nl|degree|balanced")
      ->required()
      ->check(CLI::IsMember({"weight", "nl", "degree", "balanced"}));
  dist->add_option("--n", dist_n, "variable count")->required();
  dist->add_option("--samples", dist_samples, "samples per population");
  dist->add_option("--population", dist_pop, "coincident|uniform|both")
      ->check(CLI::IsMember({"coincident", "uniform", "both"}));
  dist->add_option("--bins", dist_bins, "weight histogram bins");

  int cs_n = 0;
  auto* cs = app.add_subcommand("enum-cs",
                                "list every coincident symmetric function");
  cs->fallthrough();
  cs->add_option("--n", cs_n, "variable count (<= 64)")->required();

  std::string verify_level = "quick";
  auto* ver = app.add_subcommand("verify", "run the invariant audit");
  ver->fallthrough();
  ver->add_option("--level", verify_level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_count, g);
    if (mob->parsed()) return cmd_mobius(mob_input, mob_trace, g);
    if (an->parsed()) return cmd_analyze(an_input, an_metrics, g);
    if (ci->parsed()) return cmd_ci_table(ci_n_max, ci_checkpoint, g);
    if (dist->parsed())
      return cmd_dist(dist_kind, dist_n, dist_samples, dist_pop, dist_bins, g);
    if (cs->parsed()) return cmd_enum_cs(cs_n, g);
    if (ver->parsed()) return cmd_verify(verify_level, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
