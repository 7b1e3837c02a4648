#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"
#include "boolfun/coincident.hpp"
#include "boolfun/metrics.hpp"
#include "boolfun/mobius.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/symmetric.hpp"

namespace boolfun {

enum class Population { uniform, coincident, coincident_symmetric };

inline const char* population_name(Population p) {
  switch (p) {
    case Population::uniform: return "uniform";
    case Population::coincident: return "coincident";
    case Population::coincident_symmetric: return "coincident-symmetric";
  }
  return "?";
}

inline Population population_from_string(std::string_view s) {
  if (s == "uniform") return Population::uniform;
  if (s == "coincident") return Population::coincident;
  if (s == "coincident-symmetric") return Population::coincident_symmetric;
  throw std::invalid_argument("unknown population: " + std::string(s));
}

inline unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Split [0, total) into one contiguous range per worker and run fn(worker,
/// begin, end) on its own thread. Results must be written to disjoint,
/// worker-indexed storage; any worker exception is rethrown here.
template <typename Fn>
void run_partitioned(std::uint64_t total, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = 1;
  if (jobs > total) jobs = total == 0 ? 1 : static_cast<unsigned>(total);
  if (jobs == 1) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  const std::uint64_t chunk = total / jobs;
  const std::uint64_t extra = total % jobs;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    threads.emplace_back([&fn, &errors, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline BooleanFunction sample_function(Population pop, int n, Rng& rng) {
  switch (pop) {
    case Population::uniform: return random_function(n, rng);
    case Population::coincident: return random_coincident(n, rng);
    case Population::coincident_symmetric:
      return symmetric_to_function(random_coincident_symmetric(n, rng));
  }
  throw std::invalid_argument("unknown population");
}

/// Map sample index i to metric(f_i) with per-worker RNG streams; the output
/// order is fixed by (seed, jobs), not by scheduling.
template <typename T, typename Metric>
std::vector<T> sample_metric(Population pop, int n, std::size_t count,
                             std::uint64_t seed, unsigned jobs,
                             Metric&& metric) {
  std::vector<T> out(count);
  run_partitioned(count, jobs, [&](unsigned w, std::uint64_t b,
                                   std::uint64_t e) {
    Rng rng = worker_rng(seed, w);
    for (std::uint64_t i = b; i < e; ++i)
      out[i] = metric(sample_function(pop, n, rng));
  });
  return out;
}

inline std::vector<std::uint64_t> sample_weights(Population pop, int n,
                                                 std::size_t count,
                                                 std::uint64_t seed,
                                                 unsigned jobs) {
  return sample_metric<std::uint64_t>(
      pop, n, count, seed, jobs,
      [](const BooleanFunction& f) { return weight(f); });
}

inline std::vector<std::int64_t> sample_nonlinearities(Population pop, int n,
                                                       std::size_t count,
                                                       std::uint64_t seed,
                                                       unsigned jobs) {
  detail::require(n <= kMaxWalshVars,
                  "nonlinearity sampling caps at n = 24");
  return sample_metric<std::int64_t>(
      pop, n, count, seed, jobs,
      [](const BooleanFunction& f) { return nonlinearity(f); });
}

inline std::uint64_t count_balanced_samples(Population pop, int n,
                                            std::size_t count,
                                            std::uint64_t seed,
                                            unsigned jobs) {
  const auto flags = sample_metric<unsigned char>(
      pop, n, count, seed, jobs,
      [](const BooleanFunction& f) {
        return static_cast<unsigned char>(is_balanced(f));
      });
  std::uint64_t c = 0;
  for (unsigned char b : flags) c += b;
  return c;
}

/// Entry d is the mean number of degree-d monomials in the ANF across the
/// sample.
inline std::vector<double> mean_degree_profile(Population pop, int n,
                                               std::size_t count,
                                               std::uint64_t seed,
                                               unsigned jobs) {
  std::vector<std::vector<std::uint64_t>> per_worker;
  unsigned used = jobs == 0 ? 1 : jobs;
  if (used > count) used = count == 0 ? 1 : static_cast<unsigned>(count);
  per_worker.assign(used, std::vector<std::uint64_t>(n + 1, 0));
  run_partitioned(count, used, [&](unsigned w, std::uint64_t b,
                                   std::uint64_t e) {
    Rng rng = worker_rng(seed, w);
    for (std::uint64_t i = b; i < e; ++i) {
      const auto hist = degree_distribution(anf_of(sample_function(pop, n, rng)));
      for (int d = 0; d <= n; ++d) per_worker[w][d] += hist[d];
    }
  });
  std::vector<double> mean(n + 1, 0.0);
  for (const auto& hist : per_worker)
    for (int d = 0; d <= n; ++d) mean[d] += static_cast<double>(hist[d]);
  if (count > 0)
    for (auto& m : mean) m /= static_cast<double>(count);
  return mean;
}

/// Fixed-width binning of integer observations over [lo, hi).
struct BinnedCounts {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t step = 1;
  std::vector<std::uint64_t> counts;
};

inline BinnedCounts bin_counts(const std::vector<std::uint64_t>& values,
                               std::uint64_t lo, std::uint64_t hi,
                               unsigned bins) {
  detail::require(bins >= 1 && hi > lo, "bad binning request");
  BinnedCounts out;
  out.lo = lo;
  out.hi = hi;
  const std::uint64_t span = hi - lo;
  out.step = (span + bins - 1) / bins;
  out.counts.assign((span + out.step - 1) / out.step, 0);
  for (std::uint64_t v : values) {
    detail::require(v >= lo && v < hi, "observation outside binning range");
    ++out.counts[(v - lo) / out.step];
  }
  return out;
}

// --- correlation immunity census ------------------------------------------

/// CI(1) for a packed truth table of n <= 6 variables: the spectrum value at
/// e_i vanishes iff the support splits evenly across the x_i stripe masks.
inline bool ci1_packed(std::uint64_t table, int n) {
  const int ones = std::popcount(table);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t stripe = ~kIndexBitClear[i];
    if (2 * std::popcount(table & stripe) != ones) return false;
  }
  return true;
}

/// Weight profile of the CI(1) coincident functions of n variables, from a
/// sweep of the full generator space (2^(2^(n-1)) members).
struct CiRow {
  int n = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weight_counts;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> cor1;  // CI(1) census over all functions
};

inline CiRow ci_coincident_row(int n) {
  detail::require(n >= 1 && n <= 5, "coincident CI rows cap at n = 5");
  std::vector<std::uint64_t> by_weight(std::size_t{1} << n, 0);
  CiRow row;
  row.n = n;
  const auto tally = [&](const BooleanFunction& h) {
    if (!correlation_immune_1(h)) return;
    ++by_weight[weight(h)];
    ++row.total;
  };
  if (n == 1) {
    tally(function_from_word(1, 0));  // zero
    tally(function_from_word(1, 2));  // x_1
  } else {
    const std::uint64_t generators = std::uint64_t{1} << (1 << (n - 1));
    for (std::uint64_t g = 0; g < generators; ++g)
      tally(from_generator(function_from_word(n - 1, g)));
  }
  for (std::uint64_t w = 0; w < by_weight.size(); ++w)
    if (by_weight[w]) row.weight_counts.emplace_back(w, by_weight[w]);
  return row;
}

/// CI(1) census over every function of n variables, n <= 5. The n = 5 sweep
/// walks 2^32 tables in blocks, reporting progress and checkpointing the
/// block counter so an interrupted run resumes.
inline std::uint64_t count_ci1_exhaustive(int n, unsigned jobs,
                                          std::ostream* progress = nullptr,
                                          const std::string& checkpoint = "") {
  detail::require(n >= 1 && n <= 5, "CI census caps at n = 5");
  if (n <= 4) {
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < tables; ++t) count += ci1_packed(t, n);
    return count;
  }

  constexpr std::uint64_t kTotal = std::uint64_t{1} << 32;
  constexpr std::uint64_t kBlocks = 256;
  constexpr std::uint64_t kBlockSize = kTotal / kBlocks;
  std::uint64_t first_block = 0;
  std::uint64_t count = 0;
  if (!checkpoint.empty()) {
    std::ifstream in(checkpoint);
    std::string tag;
    std::uint64_t next = 0, have = 0, blocks = 0;
    if (in >> tag >> next >> have >> blocks && tag == "cor1-n5" &&
        blocks == kBlocks && next <= kBlocks) {
      first_block = next;
      count = have;
    }
  }
  for (std::uint64_t block = first_block; block < kBlocks; ++block) {
    std::vector<std::uint64_t> partial(jobs == 0 ? 1 : jobs, 0);
    run_partitioned(kBlockSize, jobs, [&](unsigned w, std::uint64_t b,
                                          std::uint64_t e) {
      const std::uint64_t base = block * kBlockSize;
      std::uint64_t local = 0;
      for (std::uint64_t t = base + b; t < base + e; ++t)
        local += ci1_packed(t, 5);
      partial[w] = local;
    });
    for (std::uint64_t p : partial) count += p;
    if (!checkpoint.empty()) {
      std::ofstream out(checkpoint, std::ios::trunc);
      out << "cor1-n5 " << (block + 1) << ' ' << count << ' ' << kBlocks
          << '\n';
    }
    if (progress && ((block + 1) % 16 == 0 || block + 1 == kBlocks))
      *progress << "cor_1(5) sweep: " << (block + 1) << '/' << kBlocks
                << " blocks\n"
                << std::flush;
  }
  return count;
}

inline std::vector<CiRow> ci_table(int n_max, bool long_mode, unsigned jobs,
                                   std::ostream* progress = nullptr,
                                   const std::string& checkpoint = "") {
  detail::require(n_max >= 1 && n_max <= 5, "ci-table caps at n_max = 5");
  std::vector<CiRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    CiRow row = ci_coincident_row(n);
    if (n <= 4)
      row.cor1 = count_ci1_exhaustive(n, jobs);
    else if (long_mode)
      row.cor1 = count_ci1_exhaustive(n, jobs, progress, checkpoint);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace boolfun
