#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"

namespace boolfun {

/// Largest n accepted by the per-point subset-sum routines.
inline constexpr int kMaxNaiveVars = 14;

/// In-place Mobius transform: after the call, bit u holds the XOR of the
/// original bits over all v ⪯ u. One butterfly pass per variable; strides
/// below a word run bit-parallel, wider strides XOR whole word blocks.
inline void mobius_transform_in_place(BitTable& t) {
  auto words = t.words();
  const int n = t.vars();
  for (int i = 0; i < n && i < 6; ++i) {
    const std::uint64_t lower = kIndexBitClear[i];
    const int s = 1 << i;
    for (auto& w : words) w ^= (w & lower) << s;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t s = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < words.size(); base += 2 * s)
      for (std::size_t j = 0; j < s; ++j) words[base + s + j] ^= words[base + j];
  }
}

inline BooleanFunction transform(const BooleanFunction& f) {
  BitTable t = f.table();
  mobius_transform_in_place(t);
  return BooleanFunction(std::move(t));
}

/// Intermediate state after each butterfly pass, for tracing; element i is
/// the table once variables 1..i+1 have been folded.
inline std::vector<BitTable> transform_layers(const BooleanFunction& f) {
  std::vector<BitTable> layers;
  layers.reserve(f.vars());
  BitTable t = f.table();
  auto words = t.words();
  const int n = t.vars();
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const std::uint64_t lower = kIndexBitClear[i];
      const int s = 1 << i;
      for (auto& w : words) w ^= (w & lower) << s;
    } else {
      const std::size_t s = std::size_t{1} << (i - 6);
      for (std::size_t base = 0; base < words.size(); base += 2 * s)
        for (std::size_t j = 0; j < s; ++j)
          words[base + s + j] ^= words[base + j];
    }
    layers.push_back(t);
  }
  return layers;
}

/// Reference transform: each output bit is the subset XOR-sum computed on its
/// own, with no shared layer passes. Index bits >= 6 are enumerated by the
/// submask walk; the low six are folded through a 64-entry ⪯-indicator table
/// built by a literal double loop over the definition.
inline BooleanFunction transform_naive(const BooleanFunction& f) {
  const int n = f.vars();
  detail::require(n <= kMaxNaiveVars, "transform_naive caps at n = 14");

  std::uint64_t below[64];
  const int low = n < 6 ? n : 6;
  for (std::uint32_t l = 0; l < (1u << low); ++l) {
    std::uint64_t m = 0;
    for (std::uint32_t v = 0; v < (1u << low); ++v)
      if (is_submask(v, l)) m |= std::uint64_t{1} << v;
    below[l] = m;
  }

  const auto src = f.table().words();
  BitTable out(n);
  auto dst = out.words();
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    const std::uint64_t hi = u >> 6;
    const std::uint64_t mask = below[u & 63];
    std::uint64_t acc = 0;
    std::uint64_t h = hi;
    while (true) {
      acc ^= std::uint64_t(std::popcount(src[h] & mask));
      if (h == 0) break;
      h = (h - 1) & hi;
    }
    dst[u >> 6] |= (acc & 1) << (u & 63);
  }
  return BooleanFunction(std::move(out));
}

inline Anf anf_of(const BooleanFunction& f) {
  BitTable t = f.table();
  mobius_transform_in_place(t);
  return Anf(std::move(t));
}

/// Inverse of anf_of; the transform is an involution, so it is the same pass.
inline BooleanFunction function_of(const Anf& g) {
  BitTable t = g.coeffs();
  mobius_transform_in_place(t);
  return BooleanFunction(std::move(t));
}

/// phi(f) = f XOR transform(f). Its fixed points are exactly the kernel.
inline BooleanFunction phi(const BooleanFunction& f) {
  BitTable t = f.table();
  mobius_transform_in_place(t);
  t ^= f.table();
  return BooleanFunction(std::move(t));
}

inline bool is_coincident(const BooleanFunction& f) {
  return transform(f) == f;
}

/// Lattice form of the same predicate: every u must cover an even number of
/// support points strictly below it. Checked point by point with a proper
/// submask walk; no butterfly passes are involved.
inline bool is_coincident_lattice(const BooleanFunction& f) {
  const int n = f.vars();
  detail::require(n <= kMaxNaiveVars, "is_coincident_lattice caps at n = 14");
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    unsigned acc = 0;
    for (std::uint64_t v = (u - 1) & u; v != u;
         v = (v - 1) & u) {  // walks u-1, ..., 0 then wraps to u
      acc ^= unsigned{f.bit(v)};
      if (v == 0) break;
    }
    if (u != 0 && (acc & 1)) return false;
  }
  return true;
}

/// f and g differ by a coincident function iff phi agrees on them.
inline bool same_class(const BooleanFunction& f, const BooleanFunction& g) {
  detail::require(f.vars() == g.vars(), "functions have different arity");
  return phi(f) == phi(g);
}

/// Product on disjoint variables: f1 on x_1..x_k, f2 on the next m variables;
/// result on k+m variables, value f1(y) AND f2(z).
inline BooleanFunction disjoint_product(const BooleanFunction& f1,
                                        const BooleanFunction& f2) {
  const int k = f1.vars();
  const int m = f2.vars();
  detail::checked_var_count(k + m);
  BitTable t(k + m);
  for (std::uint64_t z = 0; z < f2.size(); ++z) {
    if (!f2.bit(z)) continue;
    for (std::uint64_t y = 0; y < f1.size(); ++y)
      if (f1.bit(y)) t.set_bit((z << k) | y, true);
  }
  return BooleanFunction(std::move(t));
}

/// transform factors through disjoint products: the result equals
/// transform(disjoint_product(f1, f2)) computed piecewise.
inline BooleanFunction transform_disjoint_product(const BooleanFunction& f1,
                                                  const BooleanFunction& f2) {
  return disjoint_product(transform(f1), transform(f2));
}

}  // namespace boolfun
