#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolfun/analyze.hpp"
#include "boolfun/coincident.hpp"
#include "boolfun/decompose.hpp"
#include "boolfun/experiments.hpp"
#include "boolfun/metrics.hpp"
#include "boolfun/mobius.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/stats.hpp"
#include "boolfun/symmetric.hpp"

namespace boolfun {

struct VerifyCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

namespace detail {

class CheckRecorder {
 public:
  explicit CheckRecorder(std::vector<VerifyCheck>& out) : out_(out) {}

  /// Run one named check; `body` returns false or throws to fail and may
  /// write an explanation into the stream it is handed.
  template <typename Body>
  void run(std::string name, Body&& body) {
    VerifyCheck check;
    check.name = std::move(name);
    std::ostringstream detail;
    try {
      check.ok = body(detail);
    } catch (const std::exception& e) {
      check.ok = false;
      detail << "exception: " << e.what();
    }
    check.detail = detail.str();
    out_.push_back(std::move(check));
  }

 private:
  std::vector<VerifyCheck>& out_;
};

/// Rank over K_2 of the tables viewed as bit vectors.
inline std::size_t table_rank(std::vector<BitTable> rows) {
  std::size_t rank = 0;
  const std::size_t bits = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < bits && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].bit(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].bit(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

/// Direct spectrum value: sum of (-1)^(f(a) XOR u.a) over all points.
inline std::int64_t walsh_direct(const BooleanFunction& f, std::uint64_t u) {
  std::int64_t s = 0;
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    const unsigned sign = unsigned{f.bit(a)} ^
                          unsigned(std::popcount(a & u) & 1);
    s += sign ? -1 : 1;
  }
  return s;
}

/// Plain quadratic reference: output bit u is the XOR of f over v ⪯ u by a
/// full scan, nothing shared between outputs.
inline BooleanFunction transform_quadratic(const BooleanFunction& f) {
  BitTable out(f.vars());
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    unsigned acc = 0;
    for (std::uint64_t v = 0; v <= u; ++v)
      if (is_submask(v, u)) acc ^= unsigned{f.bit(v)};
    out.set_bit(u, acc & 1);
  }
  return BooleanFunction(std::move(out));
}

}  // namespace detail

/// Self-contained invariant audit. `full` adds the exhaustive n = 4 passes
/// and the statistical comparisons; the quick set stays within seconds.
inline std::vector<VerifyCheck> run_verify(bool full, std::uint64_t seed,
                                           unsigned jobs) {
  std::vector<VerifyCheck> checks;
  detail::CheckRecorder rec(checks);

  rec.run("transform is an involution", [&](std::ostream& why) {
    for (int n = 1; n <= 3; ++n)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1 << n)); ++t) {
        const BooleanFunction f = function_from_word(n, t);
        if (transform(transform(f)) != f) {
          why << "failed at " << to_hex(f);
          return false;
        }
      }
    Rng rng = seeded_rng(seed);
    for (int i = 0; i < 40; ++i) {
      const int n = 4 + int(rng() % 13);
      const BooleanFunction f = random_function(n, rng);
      if (transform(transform(f)) != f) {
        why << "failed at random n=" << n;
        return false;
      }
    }
    return true;
  });

  rec.run("transform is linear and fixes the origin", [&](std::ostream& why) {
    for (std::uint64_t a = 0; a < 16; ++a)
      for (std::uint64_t b = 0; b < 16; ++b) {
        const BooleanFunction f = function_from_word(2, a);
        const BooleanFunction g = function_from_word(2, b);
        if (transform(f ^ g) != (transform(f) ^ transform(g))) {
          why << "additivity failed at n=2";
          return false;
        }
      }
    Rng rng = seeded_rng(splitmix64(seed));
    for (int i = 0; i < 60; ++i) {
      const int n = 3 + int(rng() % 12);
      const BooleanFunction f = random_function(n, rng);
      const BooleanFunction g = random_function(n, rng);
      if (transform(f ^ g) != (transform(f) ^ transform(g))) {
        why << "additivity failed at random n=" << n;
        return false;
      }
      if (transform(f).bit(0) != f.bit(0)) {
        why << "origin bit moved at n=" << n;
        return false;
      }
    }
    return true;
  });

  rec.run("transform swaps monomials and minterms", [&](std::ostream& why) {
    for (int n = 1; n <= 7; ++n)
      for (std::uint32_t u = 0; u < (1u << n); ++u) {
        const Valuation val(u, n);
        BitTable single(n);
        single.set_bit(u, true);
        // the monomial's table folds down to the lone coefficient at u
        if (transform(monomial_truth_table(val)).table() != single) {
          why << "monomial mismatch at n=" << n << " u=" << u;
          return false;
        }
        // the one-point indicator expands to the minterm's superset form
        if (transform(BooleanFunction(single)).table() !=
            minterm_anf(val).coeffs()) {
          why << "minterm mismatch at n=" << n << " u=" << u;
          return false;
        }
      }
    return true;
  });

  rec.run("butterfly agrees with per-point subset sums",
          [&](std::ostream& why) {
            for (int n = 1; n <= 2; ++n)
              for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1 << n));
                   ++t) {
                const BooleanFunction f = function_from_word(n, t);
                if (transform(f) != transform_naive(f) ||
                    transform(f) != detail::transform_quadratic(f)) {
                  why << "exhaustive mismatch at " << to_hex(f);
                  return false;
                }
              }
            Rng rng = seeded_rng(splitmix64(seed + 1));
            for (int i = 0; i < 30; ++i) {
              const int n = 3 + int(rng() % 10);
              const BooleanFunction f = random_function(n, rng);
              if (transform(f) != transform_naive(f)) {
                why << "sampled mismatch at n=" << n;
                return false;
              }
              if (is_coincident(f) != is_coincident_lattice(f)) {
                why << "predicate mismatch at n=" << n;
                return false;
              }
            }
            return true;
          });

  rec.run("extension identities along new variables", [&](std::ostream& why) {
    Rng rng = seeded_rng(splitmix64(seed + 2));
    for (int i = 0; i < 40; ++i) {
      const int n = 2 + int(rng() % 11);
      const BooleanFunction f = random_function(n - 1, rng);
      const BooleanFunction lifted = extend(f, 1);
      const BooleanFunction mu = transform(f);
      // top variable absent: transform lands on (1 xor x_n) * transform(f)
      const BooleanFunction want_a =
          shannon_join(mu, BooleanFunction::zeros(n - 1));
      if (transform(lifted) != want_a) {
        why << "lift identity failed at n=" << n;
        return false;
      }
      // f gated by x_n on one side, and by its complement on the other
      const BooleanFunction gated =
          shannon_join(BooleanFunction::zeros(n - 1), f);
      if (transform(gated) != shannon_join(BooleanFunction::zeros(n - 1), mu)) {
        why << "x_n-product identity failed at n=" << n;
        return false;
      }
      const BooleanFunction blocked =
          shannon_join(f, BooleanFunction::zeros(n - 1));
      if (transform(blocked) != extend(mu, 1)) {
        why << "complement-product identity failed at n=" << n;
        return false;
      }
    }
    return true;
  });

  rec.run("decompositions bridge through the transform",
          [&](std::ostream& why) {
            Rng rng = seeded_rng(splitmix64(seed + 3));
            for (int i = 0; i < 40; ++i) {
              const int n = 2 + int(rng() % 13);
              const BooleanFunction f = random_function(n, rng);
              const auto [f0, f1] = shannon_split(f);
              if (shannon_join(f0, f1) != f) {
                why << "shannon round trip failed at n=" << n;
                return false;
              }
              const Anf g = anf_of(f);
              const auto [g0, g1] = reed_muller_split(g);
              if (reed_muller_join(g0, g1) != g) {
                why << "reed-muller round trip failed at n=" << n;
                return false;
              }
              if (g0 != anf_of(f0) || g1 != anf_of(f0 ^ f1)) {
                why << "cofactor bridge failed at n=" << n;
                return false;
              }
            }
            return true;
          });

  rec.run("degrees of a function and its transform cover n",
          [&](std::ostream& why) {
            Rng rng = seeded_rng(splitmix64(seed + 4));
            for (int i = 0; i < 60; ++i) {
              const int n = 1 + int(rng() % 12);
              const BooleanFunction f = random_function(n, rng);
              if (weight(f) == 0) continue;
              const auto d1 = degree(anf_of(f));
              const auto dmu = degree(anf_of(transform(f)));
              if (!d1 || !dmu || *d1 + *dmu < n) {
                why << "degree sum below n=" << n;
                return false;
              }
            }
            return true;
          });

  rec.run("fixed points are counted by 2^(2^(n-1))", [&](std::ostream& why) {
    const int n_max = full ? 4 : 3;
    for (int n = 1; n <= n_max; ++n) {
      std::uint64_t count = 0;
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1 << n)); ++t)
        count += is_coincident(function_from_word(n, t));
      if (count != (std::uint64_t{1} << (1 << (n - 1)))) {
        why << "n=" << n << " counted " << count;
        return false;
      }
    }
    return true;
  });

  rec.run("h family is coincident and spans the fixed points",
          [&](std::ostream& why) {
            for (int n = 1; n <= 6; ++n)
              for (std::uint32_t u = 0; u < (1u << n); ++u)
                if (!is_coincident(h_of(Valuation(u, n)))) {
                  why << "h not coincident at n=" << n << " u=" << u;
                  return false;
                }
            for (int n = 2; n <= 8; ++n) {
              std::vector<BitTable> rows;
              for (const auto& h : coincident_basis(n))
                rows.push_back(h.table());
              if (detail::table_rank(std::move(rows)) !=
                  (std::size_t{1} << (n - 1))) {
                why << "basis rank deficient at n=" << n;
                return false;
              }
            }
            return true;
          });

  rec.run("generator map is a bijection", [&](std::ostream& why) {
    for (int n = 2; n <= 3; ++n)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1 << (n - 1)));
           ++t) {
        const BooleanFunction g = function_from_word(n - 1, t);
        if (generator_of(from_generator(g)) != g) {
          why << "round trip failed at n=" << n;
          return false;
        }
      }
    Rng rng = seeded_rng(splitmix64(seed + 5));
    for (int i = 0; i < 20; ++i) {
      const BooleanFunction g = random_function(11, rng);
      const BooleanFunction h = from_generator(g);
      if (!is_coincident(h) || generator_of(h) != g) {
        why << "round trip failed at n=12";
        return false;
      }
      const BooleanFunction h2 = random_coincident(12, rng);
      if (from_generator(generator_of(h2)) != h2) {
        why << "reverse round trip failed at n=12";
        return false;
      }
    }
    return true;
  });

  rec.run("random coincident functions satisfy the contract",
          [&](std::ostream& why) {
            Rng rng = seeded_rng(splitmix64(seed + 6));
            for (int n = 1; n <= 10; ++n)
              for (int i = 0; i < 25; ++i) {
                const BooleanFunction h = random_coincident(n, rng);
                if (!is_coincident(h) || h.bit(0)) {
                  why << "contract violated at n=" << n;
                  return false;
                }
              }
            std::vector<std::uint64_t> buckets(4, 0);
            for (int i = 0; i < 4000; ++i) {
              const BooleanFunction h = random_coincident(2, rng);
              ++buckets[h.table().words()[0] >> 2];  // upper half = generator
            }
            for (std::uint64_t b : buckets)
              if (b < 800 || b > 1200) {
                why << "n=2 classes skewed: " << buckets[0] << ','
                    << buckets[1] << ',' << buckets[2] << ',' << buckets[3];
                return false;
              }
            return true;
          });

  rec.run("coincident space closes under xor and keeps degree >= n/2",
          [&](std::ostream& why) {
            Rng rng = seeded_rng(splitmix64(seed + 7));
            for (int i = 0; i < 25; ++i) {
              const BooleanFunction a = random_coincident(10, rng);
              const BooleanFunction b = random_coincident(10, rng);
              if (!is_coincident(a ^ b)) {
                why << "xor left the space at n=10";
                return false;
              }
            }
            for (int n = 1; n <= 4; ++n)
              for (std::uint64_t t = 0;
                   t < (std::uint64_t{1} << (1 << (n - 1))); ++t) {
                const BooleanFunction h =
                    n == 1 ? function_from_word(1, t << 1)
                           : from_generator(function_from_word(n - 1, t));
                if (weight(h) == 0) continue;
                const auto d = degree(Anf(h.table()));
                if (!d || *d < (n + 1) / 2) {
                  why << "degree dropped below ceil(n/2) at n=" << n;
                  return false;
                }
              }
            return true;
          });

  rec.run("symmetric enumeration matches the brute filter",
          [&](std::ostream& why) {
            for (int n = 1; n <= 8; ++n) {
              std::set<std::string> brute;
              for (std::uint64_t bits = 0;
                   bits < (std::uint64_t{1} << (n + 1)); ++bits) {
                LambdaVector l(n);
                for (int k = 0; k <= n; ++k) l.set(k, (bits >> k) & 1);
                const bool direct =
                    is_coincident(symmetric_to_function(l));
                if (direct != is_coincident_lambda(l)) {
                  why << "lambda predicate disagrees at n=" << n;
                  return false;
                }
                if (direct) brute.insert(to_lambda_string(l));
              }
              std::set<std::string> enumerated;
              for (const auto& l : enumerate_coincident_symmetric(n))
                enumerated.insert(to_lambda_string(l));
              if (brute != enumerated ||
                  enumerated.size() != coincident_symmetric_count(n)) {
                why << "solution sets differ at n=" << n;
                return false;
              }
            }
            for (int n = 9; n <= 12; ++n) {
              std::uint64_t count = 0;
              for_each_coincident_symmetric(n,
                                            [&](const LambdaVector&) { ++count; });
              if (count != coincident_symmetric_count(n)) {
                why << "count formula failed at n=" << n;
                return false;
              }
            }
            return true;
          });

  rec.run("transform swaps lambda and value vectors", [&](std::ostream& why) {
    for (int n = 1; n <= 8; ++n)
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1));
           ++bits) {
        LambdaVector l(n);
        for (int k = 0; k <= n; ++k) l.set(k, (bits >> k) & 1);
        const BooleanFunction f = symmetric_to_function(l);
        const BooleanFunction mu = transform(f);
        if (!is_symmetric(mu)) {
          why << "transform broke symmetry at n=" << n;
          return false;
        }
        if (lambda_of(mu).bits() != lambda_to_values(l).bits()) {
          why << "duality failed at n=" << n;
          return false;
        }
        if (values_to_lambda(lambda_to_values(l)) != l) {
          why << "fold is not an involution at n=" << n;
          return false;
        }
      }
    for (int n = 1; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) {
        LambdaVector ek(n);
        ek.set(k, true);
        const LambdaVector want = mu_sigma(k, n);
        if (lambda_of(transform(symmetric_to_function(ek))) != want) {
          why << "mu_sigma mismatch at n=" << n << " k=" << k;
          return false;
        }
      }
    return true;
  });

  rec.run("random symmetric generator stays in the solution set",
          [&](std::ostream& why) {
            Rng rng = seeded_rng(splitmix64(seed + 8));
            for (int n = 1; n <= 16; ++n)
              for (int i = 0; i < 50; ++i)
                if (!is_coincident_lambda(random_coincident_symmetric(n, rng))) {
                  why << "invalid lambda at n=" << n;
                  return false;
                }
            std::map<std::string, std::uint64_t> buckets;
            for (int i = 0; i < 4000; ++i)
              ++buckets[to_lambda_string(random_coincident_symmetric(5, rng))];
            if (buckets.size() != 8) {
              why << "n=5 generator reached " << buckets.size()
                  << " of 8 classes";
              return false;
            }
            for (const auto& [k, v] : buckets)
              if (v < 350 || v > 650) {
                why << "n=5 class " << k << " count " << v;
                return false;
              }
            return true;
          });

  rec.run("monotone construction stays monotone and coincident",
          [&](std::ostream& why) {
            for (int n = 1; n <= 5; ++n) {
              for (std::uint32_t u = 0; u < (1u << n); ++u) {
                const BooleanFunction f = monotone_coincident(Valuation(u, n));
                if (!is_coincident(f) || !is_monotonic(f, Direction::up)) {
                  why << "construction failed at n=" << n << " u=" << u;
                  return false;
                }
              }
              const MonotoneFamily fam = monotone_family(n);
              for (const auto& f : fam.functions)
                if (!is_coincident(f)) {
                  why << "family member not coincident at n=" << n;
                  return false;
                }
            }
            return true;
          });

  rec.run("walsh spectrum matches the direct sums", [&](std::ostream& why) {
    Rng rng = seeded_rng(splitmix64(seed + 9));
    for (int i = 0; i < 12; ++i) {
      const int n = 1 + int(rng() % 6);
      const BooleanFunction f = random_function(n, rng);
      const Spectrum s = walsh(f);
      for (std::uint64_t u = 0; u < f.size(); ++u)
        if (s.values[u] != detail::walsh_direct(f, u)) {
          why << "spectrum mismatch at n=" << n;
          return false;
        }
    }
    for (int i = 0; i < 10; ++i) {
      const BooleanFunction f = random_function(10, rng);
      const Spectrum s = walsh(f);
      std::int64_t energy = 0;
      for (std::int32_t v : s.values) energy += std::int64_t{v} * v;
      if (energy != std::int64_t{1} << 20) {
        why << "energy sum broke at n=10";
        return false;
      }
    }
    return true;
  });

  rec.run("metric shortcuts agree with first principles",
          [&](std::ostream& why) {
            for (std::uint64_t t = 0; t < 65536; ++t) {
              const BooleanFunction f = function_from_word(4, t);
              if (correlation_immune_1(f) != ci1_packed(t, 4)) {
                why << "ci1 disagreement at table " << t;
                return false;
              }
            }
            // quadratic inner product reaches the bent bound at n=10
            BitTable ip(10);
            for (std::uint64_t a = 0; a < ip.size(); ++a) {
              const unsigned prods =
                  std::popcount(a & (a >> 5) & 31u);
              if (prods & 1) ip.set_bit(a, true);
            }
            if (nonlinearity(BooleanFunction(std::move(ip))) != 496) {
              why << "bent nonlinearity is not 496";
              return false;
            }
            Rng rng = seeded_rng(splitmix64(seed + 10));
            for (int i = 0; i < 30; ++i) {
              const BooleanFunction h = random_coincident(8, rng);
              if (weight(h) != monomial_count(Anf(h.table()))) {
                why << "coincident weight/monomial split";
                return false;
              }
              const auto hist = degree_distribution(Anf(h.table()));
              if (hist[1] != 0 && hist[1] != 8) {
                why << "degree-1 monomials neither absent nor full";
                return false;
              }
            }
            return true;
          });

  rec.run("ks statistic behaves on known inputs", [&](std::ostream& why) {
    std::vector<std::uint64_t> a, b;
    for (int i = 0; i < 400; ++i) {
      a.push_back(i % 97);
      b.push_back((i * 31) % 97);
    }
    const KsResult same = ks_two_sample(a, a);
    if (same.d != 0.0 || same.p_value < 0.999) {
      why << "identical samples scored d=" << same.d;
      return false;
    }
    std::vector<std::uint64_t> shifted;
    for (auto v : a) shifted.push_back(v + 1000);
    const KsResult apart = ks_two_sample(a, shifted);
    if (apart.d != 1.0 || apart.p_value > 1e-6) {
      why << "disjoint samples scored p=" << apart.p_value;
      return false;
    }
    // same-population comparison, majority vote so no seed choice can make
    // an honest 1% rejection look like a defect
    int accepts = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto w10 =
          sample_weights(Population::uniform, 10, 400, seed + 2 * s, jobs);
      const auto w10b =
          sample_weights(Population::uniform, 10, 400, seed + 2 * s + 1, jobs);
      if (ks_two_sample(w10, w10b).p_value > 0.01) ++accepts;
    }
    if (accepts < 4) {
      why << "same-population weights accepted only " << accepts << "/5";
      return false;
    }
    return true;
  });

  if (full) {
    rec.run("phi marks points with oddly many strict predecessors in the "
            "support",
            [&](std::ostream& why) {
              for (std::uint64_t t = 0; t < 65536; ++t) {
                const BooleanFunction f = function_from_word(4, t);
                const BooleanFunction p = phi(f);
                for (std::uint64_t u = 0; u < 16; ++u) {
                  unsigned acc = 0;
                  for (std::uint64_t v = 0; v < u; ++v)
                    if (is_submask(v, u)) acc ^= unsigned{f.bit(v)};
                  if (bool(acc & 1) != p.bit(u)) {
                    why << "phi characterization failed at table " << t;
                    return false;
                  }
                }
              }
              return true;
            });

    rec.run("subset-sum oracle holds at the n=14 cap", [&](std::ostream& why) {
      Rng rng = seeded_rng(splitmix64(seed + 11));
      for (int n : {13, 14})
        for (int i = 0; i < 3; ++i) {
          const BooleanFunction f = random_function(n, rng);
          if (transform(f) != transform_naive(f)) {
            why << "mismatch at n=" << n;
            return false;
          }
        }
      return true;
    });

    rec.run("transform reaches degree n about half the time",
            [&](std::ostream& why) {
              const int n = 12;
              const std::size_t samples = 20000;
              std::uint64_t top = 0, top_given_top = 0, f_top = 0;
              Rng rng = seeded_rng(splitmix64(seed + 12));
              for (std::size_t i = 0; i < samples; ++i) {
                const BooleanFunction f = random_function(n, rng);
                const bool mu_top = anf_of(f).bit(f.size() - 1);
                const bool own_top = f.bit(f.size() - 1);
                top += mu_top;
                f_top += own_top;
                top_given_top += mu_top && own_top;
              }
              const double band = 3.0 * 0.5 / std::sqrt(double(samples));
              const double p = double(top) / double(samples);
              if (std::abs(p - 0.5) > band) {
                why << "unconditional rate " << p;
                return false;
              }
              const double pc = double(top_given_top) / double(f_top);
              const double bandc = 3.0 * 0.5 / std::sqrt(double(f_top));
              if (std::abs(pc - 0.5) > bandc) {
                why << "conditioned rate " << pc;
                return false;
              }
              return true;
            });

    rec.run("weight samples from both populations pass cross-seed ks",
            [&](std::ostream& why) {
              int passes = 0;
              for (std::uint64_t s = 1; s <= 10; ++s) {
                const auto wc = sample_weights(Population::coincident, 10, 500,
                                               seed + s, jobs);
                const auto wu = sample_weights(Population::uniform, 10, 500,
                                               seed + 1000 + s, jobs);
                if (ks_two_sample(wc, wu).p_value > 0.01) ++passes;
              }
              if (passes < 9) {
                why << "only " << passes << "/10 seeds accepted";
                return false;
              }
              return true;
            });

    rec.run("balanced fraction tracks the central binomial mass",
            [&](std::ostream& why) {
              const int n = 10;
              const std::size_t samples = 40000;
              const double expect = std::exp(
                  log_binomial(1024.0, 512.0) - 1024.0 * std::log(2.0));
              const double sigma =
                  std::sqrt(expect * (1 - expect) / double(samples));
              const double uniform_rate =
                  double(count_balanced_samples(Population::uniform, n,
                                                samples, seed + 31, jobs)) /
                  double(samples);
              if (std::abs(uniform_rate - expect) > 5 * sigma) {
                why << "uniform rate " << uniform_rate << " vs " << expect;
                return false;
              }
              // the coincident population has no closed form pinned here;
              // require the same order of magnitude
              const double coincident_rate =
                  double(count_balanced_samples(Population::coincident, n,
                                                samples, seed + 32, jobs)) /
                  double(samples);
              if (coincident_rate < 0.6 * expect ||
                  coincident_rate > 1.6 * expect) {
                why << "coincident rate " << coincident_rate << " vs "
                    << expect;
                return false;
              }
              return true;
            });

    rec.run("ci census matches the small exhaustive counts",
            [&](std::ostream& why) {
              const std::uint64_t want[] = {2, 4, 18, 648};
              for (int n = 1; n <= 4; ++n)
                if (count_ci1_exhaustive(n, jobs) != want[n - 1]) {
                  why << "cor_1(" << n << ") off";
                  return false;
                }
              const auto rows = ci_table(4, false, jobs);
              const std::uint64_t totals[] = {1, 2, 2, 8};
              for (int n = 1; n <= 4; ++n)
                if (rows[n - 1].total != totals[n - 1]) {
                  why << "coincident ci totals off at n=" << n;
                  return false;
                }
              return true;
            });
  }

  return checks;
}

}  // namespace boolfun
