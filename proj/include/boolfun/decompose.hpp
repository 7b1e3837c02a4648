#pragma once

#include <cstdint>
#include <utility>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"

namespace boolfun {

namespace detail {

/// Bits [0, 2^(n-1)) as a table on n-1 variables.
inline BitTable lower_half(const BitTable& t) {
  detail::require(t.vars() >= 2, "cannot split a 1-variable table");
  BitTable half(t.vars() - 1);
  const auto src = t.words();
  auto dst = half.words();
  if (half.size() >= kWordBits) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i];
  } else {
    dst[0] = src[0] & ((std::uint64_t{1} << half.size()) - 1);
  }
  return half;
}

/// Bits [2^(n-1), 2^n) as a table on n-1 variables.
inline BitTable upper_half(const BitTable& t) {
  detail::require(t.vars() >= 2, "cannot split a 1-variable table");
  BitTable half(t.vars() - 1);
  const auto src = t.words();
  auto dst = half.words();
  if (half.size() >= kWordBits) {
    const std::size_t off = dst.size();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[off + i];
  } else {
    dst[0] = src[0] >> half.size();
  }
  return half;
}

/// Concatenate two tables of equal arity into one on n+1 variables; `lo`
/// occupies the indices with the new top variable clear.
inline BitTable concat(const BitTable& lo, const BitTable& hi) {
  detail::require(lo.vars() == hi.vars(), "halves have different arity");
  const int n = lo.vars() + 1;
  detail::checked_var_count(n);
  BitTable t(n);
  auto dst = t.words();
  const auto a = lo.words();
  const auto b = hi.words();
  if (lo.size() >= kWordBits) {
    for (std::size_t i = 0; i < a.size(); ++i) dst[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) dst[a.size() + i] = b[i];
  } else {
    dst[0] = a[0] | (b[0] << lo.size());
  }
  return t;
}

}  // namespace detail

/// Shannon cofactors along the top variable x_n: f0 fixes x_n = 0 and f1
/// fixes x_n = 1. The truth table is just split in half.
struct ShannonParts {
  BooleanFunction f0;
  BooleanFunction f1;
};

inline ShannonParts shannon_split(const BooleanFunction& f) {
  return {BooleanFunction(detail::lower_half(f.table())),
          BooleanFunction(detail::upper_half(f.table()))};
}

inline BooleanFunction shannon_join(const BooleanFunction& f0,
                                    const BooleanFunction& f1) {
  return BooleanFunction(detail::concat(f0.table(), f1.table()));
}

/// Reed-Muller parts along x_n: g0 collects the monomials without x_n, g1
/// those with it (coefficient tables split in half the same way).
struct ReedMullerParts {
  Anf g0;
  Anf g1;
};

inline ReedMullerParts reed_muller_split(const Anf& g) {
  return {Anf(detail::lower_half(g.coeffs())),
          Anf(detail::upper_half(g.coeffs()))};
}

inline Anf reed_muller_join(const Anf& g0, const Anf& g1) {
  return Anf(detail::concat(g0.coeffs(), g1.coeffs()));
}

}  // namespace boolfun
