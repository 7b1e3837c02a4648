// Acceptance battery for the library: thirteen numbered criteria, one
// PASS/FAIL line each, nonzero exit if any fail. Tolerances and budgets are
// pinned here in code. --long additionally runs the 2^32 immunity census.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolfun/boolfun.hpp"

namespace {

using namespace boolfun;
using Clock = std::chrono::steady_clock;

bool g_long = false;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// F_2 rank of truth tables, plain gaussian elimination.
int rank_of(std::vector<BitTable> rows) {
  int rank = 0;
  const std::uint64_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::uint64_t c = 0; c < cols; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].bit(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && rows[r].bit(c))
        rows[r] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

// --- criteria ---------------------------------------------------------------

bool c01_fixed_point_counts(std::string& detail) {
  const auto t0 = Clock::now();
  const std::uint64_t expect[] = {2, 4, 16, 256};
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (1 << n)); ++w)
      count += is_coincident(function_from_word(n, w));
    if (count != expect[n - 1]) {
      detail = "n=" + std::to_string(n) + " count " + std::to_string(count) +
               " != " + std::to_string(expect[n - 1]);
      return false;
    }
  }
  const double el = seconds_since(t0);
  if (el > 10.0) {
    detail = "exhaustive filter took " + std::to_string(el) + "s (budget 10s)";
    return false;
  }
  return true;
}

bool c02_reference_transform(std::string& detail) {
  const auto t0 = Clock::now();
  Rng rng = seeded_rng(0x5eed0002);
  for (int n : {8, 12, 14}) {
    for (int rep = 0; rep < 10000; ++rep) {
      const BooleanFunction f = random_function(n, rng);
      if (transform_naive(f) != transform(f)) {
        detail = "disagreement at n=" + std::to_string(n) + " rep " +
                 std::to_string(rep);
        return false;
      }
    }
  }
  const double el = seconds_since(t0);
  if (el > 30.0) {
    detail = "30000 comparisons took " + std::to_string(el) +
             "s (budget 30s)";
    return false;
  }
  detail = "30000 comparisons in " + std::to_string(el).substr(0, 4) + "s";
  return true;
}

bool c03_transform_algebra(std::string& detail) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (1 << n)); ++w) {
      const BooleanFunction f = function_from_word(n, w);
      if (transform(transform(f)) != f) {
        detail = "involution broken at n=" + std::to_string(n);
        return false;
      }
    }
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b) {
      const BooleanFunction f = function_from_word(2, a);
      const BooleanFunction g = function_from_word(2, b);
      if (transform(f ^ g) != (transform(f) ^ transform(g))) {
        detail = "linearity broken at n=2";
        return false;
      }
    }
  Rng rng = seeded_rng(0x5eed0003);
  for (int rep = 0; rep < 20; ++rep) {
    const BooleanFunction f = random_function(20, rng);
    const BooleanFunction g = random_function(20, rng);
    if (transform(transform(f)) != f) {
      detail = "involution broken at n=20";
      return false;
    }
    if (transform(f ^ g) != (transform(f) ^ transform(g))) {
      detail = "linearity broken at n=20";
      return false;
    }
  }
  return true;
}

bool c04_extension_identities(std::string& detail) {
  Rng rng = seeded_rng(0x5eed0004);
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 2 + int(rng() % 8);          // 2..9
    const int k = 1 + int(rng() % 3);          // 1..3
    const BooleanFunction f = random_function(n, rng);
    // repeating the table keeps the form: all new subset sums cancel in pairs
    if (anf_of(extend(f, k)) != extend(anf_of(f), k)) {
      detail = "extension does not zero-pad the form";
      return false;
    }
  }
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 2 + int(rng() % 7);
    const int k = 1 + int(rng() % 3);
    const BooleanFunction h = random_coincident(n, rng);
    // the repetition equals its own form only for the zero function, so a
    // nonzero fixed point never survives the lift
    if (is_coincident(extend(h, k)) != (weight(h) == 0)) {
      detail = "extension membership wrong at n=" + std::to_string(n);
      return false;
    }
  }
  for (int rep = 0; rep < 10000; ++rep) {
    const int n1 = 1 + int(rng() % 5);
    const int n2 = 1 + int(rng() % 5);
    const BooleanFunction f1 = random_function(n1, rng);
    const BooleanFunction f2 = random_function(n2, rng);
    if (transform(disjoint_product(f1, f2)) !=
        disjoint_product(transform(f1), transform(f2))) {
      detail = "transform does not distribute over disjoint products";
      return false;
    }
  }
  return true;
}

bool c05_degree_bound(std::string& detail) {
  // exhaustively: every nonzero fixed point has degree at least ceil(n/2)
  for (int n = 2; n <= 4; ++n) {
    const std::uint64_t gens = std::uint64_t{1} << (1 << (n - 1));
    for (std::uint64_t g = 0; g < gens; ++g) {
      const BooleanFunction h = from_generator(function_from_word(n - 1, g));
      if (weight(h) == 0) continue;
      if (!degree_at_least(Anf(h.table()), (n + 1) / 2)) {
        detail = "low degree fixed point at n=" + std::to_string(n);
        return false;
      }
    }
  }
  // sampled at scale: 100000 random fixed points on 20 variables
  Rng rng = seeded_rng(0x5eed0005);
  for (int rep = 0; rep < 100000; ++rep) {
    const BooleanFunction h = random_coincident(20, rng);
    if (weight(h) == 0) continue;
    if (!degree_at_least(Anf(h.table()), 10)) {
      detail = "low degree fixed point at n=20, rep " + std::to_string(rep);
      return false;
    }
  }
  return true;
}

bool c06_generator_bijection(std::string& detail) {
  for (int n : {3, 4}) {
    std::set<BitTable> images;
    const std::uint64_t gens = std::uint64_t{1} << (1 << (n - 1));
    for (std::uint64_t w = 0; w < gens; ++w) {
      const BooleanFunction g = function_from_word(n - 1, w);
      const BooleanFunction h = from_generator(g);
      if (!is_coincident(h) || generator_of(h) != g) {
        detail = "round trip failed at n=" + std::to_string(n);
        return false;
      }
      images.insert(h.table());
    }
    if (images.size() != gens) {
      detail = "images collide at n=" + std::to_string(n);
      return false;
    }
  }
  Rng rng = seeded_rng(0x5eed0006);
  for (int rep = 0; rep < 200; ++rep) {
    const BooleanFunction g = random_function(11, rng);
    if (generator_of(from_generator(g)) != g) {
      detail = "round trip failed at n=12";
      return false;
    }
  }
  bool threw = false;
  try {
    generator_of(BooleanFunction::ones(3));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) {
    detail = "non fixed points must be rejected";
    return false;
  }
  return true;
}

bool c07_basis_rank_and_span(std::string& detail) {
  for (int n = 1; n <= 10; ++n) {
    const auto basis = coincident_basis(n);
    if (basis.size() != (std::uint64_t{1} << (n - 1))) {
      detail = "basis size wrong at n=" + std::to_string(n);
      return false;
    }
    std::vector<BitTable> rows;
    for (const auto& b : basis) {
      if (!is_coincident(b)) {
        detail = "basis member not fixed at n=" + std::to_string(n);
        return false;
      }
      rows.push_back(b.table());
    }
    if (rank_of(std::move(rows)) != static_cast<int>(basis.size())) {
      detail = "basis dependent at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const auto basis = coincident_basis(n);
    std::set<BitTable> span;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << basis.size());
         ++pick) {
      BitTable acc(n);
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (pick & (std::uint64_t{1} << i)) acc ^= basis[i].table();
      span.insert(acc);
    }
    std::set<BitTable> fixed;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (1 << n)); ++w) {
      const BooleanFunction f = function_from_word(n, w);
      if (is_coincident(f)) fixed.insert(f.table());
    }
    if (span != fixed) {
      detail = "span misses fixed points at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool c08_symmetric_enumeration(std::string& detail) {
  for (int n = 1; n <= 16; ++n) {
    const auto all = enumerate_coincident_symmetric(n);
    if (all.size() != (std::uint64_t{1} << (n / 2 + 1)) ||
        all.size() != coincident_symmetric_count(n)) {
      detail = "count wrong at n=" + std::to_string(n);
      return false;
    }
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
      if (!(to_lambda_string(all[i]) < to_lambda_string(all[i + 1]))) {
        detail = "order wrong at n=" + std::to_string(n);
        return false;
      }
  }
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> brute;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1));
         ++bits) {
      LambdaVector l(n);
      for (int k = 0; k <= n; ++k) l.set(k, (bits >> k) & 1u);
      if (is_coincident_lambda(l)) brute.insert(to_lambda_string(l));
    }
    std::set<std::string> fast;
    for (const auto& l : enumerate_coincident_symmetric(n))
      fast.insert(to_lambda_string(l));
    if (brute != fast) {
      detail = "enumeration misses solutions at n=" + std::to_string(n);
      return false;
    }
  }
  // the graded check matches the truth table check where tables fit
  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1));
         ++bits) {
      LambdaVector l(n);
      for (int k = 0; k <= n; ++k) l.set(k, (bits >> k) & 1u);
      if (is_coincident_lambda(l) !=
          is_coincident(symmetric_to_function(l))) {
        detail = "graded and table checks disagree at n=" + std::to_string(n);
        return false;
      }
    }
  Rng rng = seeded_rng(0x5eed0008);
  for (int rep = 0; rep < 200; ++rep)
    if (!is_coincident_lambda(random_coincident_symmetric(64, rng))) {
      detail = "random graded vector not a solution at n=64";
      return false;
    }
  return true;
}

bool c09_immunity_census(std::string& detail) {
  const auto t0 = Clock::now();
  const std::string checkpoint = "cor1-n5.acceptance-checkpoint";
  const auto rows = ci_table(5, g_long, 1, nullptr, checkpoint);
  using Profile = std::map<std::uint64_t, std::uint64_t>;
  const auto profile = [](const CiRow& row) {
    Profile m;
    for (const auto& [w, c] : row.weight_counts) m[w] = c;
    return m;
  };
  const std::uint64_t totals[] = {1, 2, 2, 8, 152};
  const Profile expected[] = {
      {{0, 1}},
      {{0, 1}, {2, 1}},
      {{0, 1}, {6, 1}},
      {{0, 1}, {4, 3}, {10, 3}, {14, 1}},
      {{0, 1}, {8, 5}, {12, 70}, {18, 70}, {22, 5}, {30, 1}}};
  const std::uint64_t census[] = {2, 4, 18, 648};
  for (int n = 1; n <= 5; ++n) {
    const CiRow& row = rows[n - 1];
    if (row.total != totals[n - 1] || profile(row) != expected[n - 1]) {
      detail = "weight profile wrong at n=" + std::to_string(n);
      return false;
    }
    if (n <= 4 && (!row.cor1 || *row.cor1 != census[n - 1])) {
      detail = "census wrong at n=" + std::to_string(n);
      return false;
    }
  }
  if (g_long) {
    if (!rows[4].cor1 || *rows[4].cor1 != 3140062) {
      detail = "2^32 census disagrees with 3140062";
      return false;
    }
    std::remove(checkpoint.c_str());
    detail = "includes the full 2^32 census";
  } else if (rows[4].cor1) {
    detail = "n=5 census ran without --long";
    return false;
  } else {
    const double el = seconds_since(t0);
    if (el > 120.0) {
      detail = "census took " + std::to_string(el) + "s (budget 120s)";
      return false;
    }
  }
  return true;
}

bool c10_monotone_constructions(std::string& detail) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      const BooleanFunction f = monotone_coincident(Valuation(u, n));
      if (!is_coincident(f) || !is_monotonic(f, Direction::up)) {
        detail = "construction fails at n=" + std::to_string(n) + " u=" +
                 std::to_string(u);
        return false;
      }
    }
    if (monotone_coincident(Valuation(0, n)) != h_of(Valuation(0, n))) {
      detail = "u=0 does not give the nonzero indicator";
      return false;
    }
    const MonotoneFamily fam = monotone_family(n);
    if (fam.constructed != (std::uint64_t{1} << (n + 1))) {
      detail = "constructed count wrong at n=" + std::to_string(n);
      return false;
    }
    std::set<BooleanFunction> members(fam.functions.begin(),
                                      fam.functions.end());
    if (members.size() != fam.functions.size()) {
      detail = "family has duplicates at n=" + std::to_string(n);
      return false;
    }
    for (const auto& f : fam.functions)
      if (!is_coincident(f)) {
        detail = "family member not fixed at n=" + std::to_string(n);
        return false;
      }
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      const BooleanFunction f = monotone_coincident(Valuation(u, n));
      if (!members.count(f) || !members.count(dual(f))) {
        detail = "family misses a construction at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool c11_population_statistics(std::string& detail) {
  // weight and nonlinearity distributions: the fixed point population is
  // statistically indistinguishable from uniform; demand p > 0.01 on at
  // least 9 of 10 seeds per setting
  for (int n : {10, 11, 20}) {
    int accept = 0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const auto wc = sample_weights(Population::coincident, n, 2000,
                                     splitmix64(0xc0ffee00 + s), 1);
      const auto wu = sample_weights(Population::uniform, n, 2000,
                                     splitmix64(0xdecaf000 + s), 1);
      if (ks_two_sample(wc, wu).p_value > 0.01) ++accept;
    }
    if (accept < 9) {
      detail = "weight KS rejects at n=" + std::to_string(n) + " (" +
               std::to_string(accept) + "/10)";
      return false;
    }
  }
  for (int n : {10, 11}) {
    int accept = 0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const auto nc = sample_nonlinearities(Population::coincident, n, 1000,
                                            splitmix64(0xf00d0000 + s), 1);
      const auto nu = sample_nonlinearities(Population::uniform, n, 1000,
                                            splitmix64(0xbeef0000 + s), 1);
      if (ks_two_sample(nc, nu).p_value > 0.01) ++accept;
    }
    if (accept < 9) {
      detail = "nl KS rejects at n=" + std::to_string(n) + " (" +
               std::to_string(accept) + "/10)";
      return false;
    }
  }
  // mean monomial counts by degree track C(n,d)/2 for both populations;
  // degrees 0 and 1 are exempt for the fixed points (pinned structurally:
  // the constant coefficient is always absent and the linear ones move
  // together)
  const int n = 10;
  const std::size_t count = 5000;
  const auto mu = mean_degree_profile(Population::uniform, n, count,
                                      splitmix64(0xabcd0001), 1);
  const auto mc = mean_degree_profile(Population::coincident, n, count,
                                      splitmix64(0xabcd0002), 1);
  for (int d = 0; d <= n; ++d) {
    double binom = 1.0;
    for (int i = 0; i < d; ++i) binom = binom * (n - i) / (i + 1);
    const double expect = binom / 2.0;
    const double sigma = std::sqrt(binom / 4.0 / double(count));
    if (std::abs(mu[d] - expect) > 5.0 * sigma) {
      detail = "uniform degree mean off at d=" + std::to_string(d);
      return false;
    }
    if (d >= 2 && std::abs(mc[d] - expect) > 5.0 * sigma) {
      detail = "fixed point degree mean off at d=" + std::to_string(d);
      return false;
    }
  }
  if (mc[0] != 0.0) {
    detail = "fixed points must have no constant coefficient";
    return false;
  }
  return true;
}

bool c12_top_degree_rate(std::string& detail) {
  Rng rng = seeded_rng(0x5eed000c);
  const int n = 12;
  std::uint64_t hits = 0;
  const int reps = 100000;
  for (int rep = 0; rep < reps; ++rep) {
    const BooleanFunction f = random_function(n, rng);
    const auto d = degree(anf_of(f));
    const bool top = d.has_value() && *d == n;
    if (top != (weight(f) % 2 == 1)) {
      detail = "top coefficient is not the weight parity";
      return false;
    }
    hits += top;
  }
  const double rate = double(hits) / reps;
  if (rate < 0.495 || rate > 0.505) {
    detail = "rate " + std::to_string(rate) + " outside [0.495, 0.505]";
    return false;
  }
  detail = "rate " + std::to_string(rate).substr(0, 6);
  return true;
}

bool c13_transform_latency(std::string& detail) {
  Rng rng = seeded_rng(0x5eed000d);
  const BooleanFunction f = random_function(24, rng);
  std::vector<double> times;
  BooleanFunction g = f;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = Clock::now();
    g = transform(g);
    times.push_back(seconds_since(t0));
  }
  // an odd number of applications of an involution is one application
  if (g != transform(f)) {
    detail = "transform at n=24 is not an involution";
    return false;
  }
  std::sort(times.begin(), times.end());
  const double median = times[1];
  std::ostringstream ss;
  ss.precision(1);
  ss << std::fixed << (median * 1000.0) << "ms median at n=24";
  detail = ss.str();
  if (median > 0.25) {
    detail += " (budget 250ms)";
    return false;
  }
  return true;
}

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) g_long = true;

  const std::vector<Criterion> criteria = {
      {"fixed point counts", c01_fixed_point_counts},
      {"reference transform agreement", c02_reference_transform},
      {"transform algebra", c03_transform_algebra},
      {"extension and product identities", c04_extension_identities},
      {"fixed point degree bound", c05_degree_bound},
      {"generator bijection", c06_generator_bijection},
      {"basis rank and span", c07_basis_rank_and_span},
      {"symmetric enumeration", c08_symmetric_enumeration},
      {"immunity census", c09_immunity_census},
      {"monotone constructions", c10_monotone_constructions},
      {"population statistics", c11_population_statistics},
      {"top degree rate", c12_top_degree_rate},
      {"transform latency", c13_transform_latency},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double el = seconds_since(t0);
    std::printf("[%s] %02zu %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, el, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) {
    std::printf("acceptance: %d of %zu criteria failed\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  return 0;
}
