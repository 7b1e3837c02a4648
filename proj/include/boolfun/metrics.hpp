#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"

namespace boolfun {

/// Walsh spectra get dense int arrays; 2^24 ints is the memory/latency line.
inline constexpr int kMaxWalshVars = 24;

struct Spectrum {
  int n = 0;
  std::vector<std::int32_t> values;  // W_f(u) at index u

  std::int32_t max_abs() const {
    std::int32_t m = 0;
    for (std::int32_t v : values) m = std::max(m, std::int32_t(std::abs(v)));
    return m;
  }
};

/// W_f(u) = sum over a of (-1)^(f(a) XOR u.a), by the usual +/- butterfly on
/// the sign table. Values are bounded by 2^n, so int32 holds every n here.
inline Spectrum walsh(const BooleanFunction& f) {
  const int n = f.vars();
  detail::require(n <= kMaxWalshVars, "walsh caps at n = 24");
  Spectrum s;
  s.n = n;
  s.values.resize(f.size());
  for (std::uint64_t a = 0; a < f.size(); ++a)
    s.values[a] = f.bit(a) ? -1 : 1;
  for (std::uint64_t stride = 1; stride < f.size(); stride <<= 1) {
    for (std::uint64_t base = 0; base < f.size(); base += 2 * stride) {
      for (std::uint64_t j = base; j < base + stride; ++j) {
        const std::int32_t x = s.values[j];
        const std::int32_t y = s.values[j + stride];
        s.values[j] = x + y;
        s.values[j + stride] = x - y;
      }
    }
  }
  return s;
}

/// Distance to the nearest affine function: 2^(n-1) - max|W|/2.
inline std::int64_t nonlinearity(const BooleanFunction& f) {
  const Spectrum s = walsh(f);
  return (std::int64_t{1} << (f.vars() - 1)) - s.max_abs() / 2;
}

inline bool is_balanced(const BooleanFunction& f) {
  return weight(f) * 2 == f.size();
}

/// Correlation immunity of order 1: the spectrum vanishes on every unit
/// weight point.
inline bool correlation_immune_1(const BooleanFunction& f) {
  const Spectrum s = walsh(f);
  for (int i = 0; i < f.vars(); ++i)
    if (s.values[std::uint64_t{1} << i] != 0) return false;
  return true;
}

/// Monomial counts of the ANF by degree; entry d counts the weight-d
/// monomials present.
inline std::vector<std::uint64_t> degree_distribution(const Anf& g) {
  std::vector<std::uint64_t> hist(g.vars() + 1, 0);
  const auto words = g.coeffs().words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w) {
      const int b = std::countr_zero(w);
      w &= w - 1;
      ++hist[std::popcount((std::uint64_t{i} << 6) | unsigned(b))];
    }
  }
  return hist;
}

}  // namespace boolfun
