#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "boolfun/bit_table.hpp"

namespace boolfun {

/// f: K_2^n -> K_2 held as its truth table; bit at index k is f of the
/// valuation with mask k.
class BooleanFunction {
 public:
  explicit BooleanFunction(BitTable table) : table_(std::move(table)) {}

  static BooleanFunction zeros(int n) { return BooleanFunction(BitTable(n)); }
  static BooleanFunction ones(int n) {
    return BooleanFunction(BitTable::ones(n));
  }

  int vars() const noexcept { return table_.vars(); }
  std::uint64_t size() const noexcept { return table_.size(); }
  const BitTable& table() const noexcept { return table_; }
  BitTable& table() noexcept { return table_; }
  bool bit(std::uint64_t idx) const noexcept { return table_.bit(idx); }

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;
  friend auto operator<=>(const BooleanFunction&,
                          const BooleanFunction&) = default;

 private:
  BitTable table_;
};

/// Algebraic normal form; bit at index u is the coefficient of the monomial
/// x^u = prod of the variables set in u.
class Anf {
 public:
  explicit Anf(BitTable coeffs) : coeffs_(std::move(coeffs)) {}

  static Anf zeros(int n) { return Anf(BitTable(n)); }

  int vars() const noexcept { return coeffs_.vars(); }
  std::uint64_t size() const noexcept { return coeffs_.size(); }
  const BitTable& coeffs() const noexcept { return coeffs_; }
  BitTable& coeffs() noexcept { return coeffs_; }
  bool bit(std::uint64_t idx) const noexcept { return coeffs_.bit(idx); }

  friend bool operator==(const Anf&, const Anf&) = default;
  friend auto operator<=>(const Anf&, const Anf&) = default;

 private:
  BitTable coeffs_;
};

inline bool evaluate(const BooleanFunction& f, const Valuation& a) {
  detail::require(f.vars() == a.vars(), "valuation has wrong variable count");
  return f.bit(a.mask());
}

/// Evaluate from coefficients: XOR of g_u over monomials u ⪯ a.
inline bool evaluate_anf(const Anf& g, const Valuation& a) {
  detail::require(g.vars() == a.vars(), "valuation has wrong variable count");
  const std::uint32_t m = a.mask();
  unsigned acc = 0;
  std::uint32_t u = m;
  while (true) {
    acc ^= unsigned{g.bit(u)};
    if (u == 0) break;
    u = (u - 1) & m;
  }
  return acc & 1;
}

inline std::uint64_t weight(const BooleanFunction& f) {
  return f.table().count();
}

inline std::uint64_t monomial_count(const Anf& g) { return g.coeffs().count(); }

/// Degree = max weight of a monomial present; empty for the zero ANF.
inline std::optional<int> degree(const Anf& g) {
  std::optional<int> best;
  const auto words = g.coeffs().words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w) {
      const int b = std::countr_zero(w);
      w &= w - 1;
      const int d = std::popcount((std::uint64_t{i} << 6) | unsigned(b));
      if (!best || d > *best) best = d;
    }
  }
  return best;
}

/// True iff some monomial of weight >= d is present; false on the zero form
/// whatever d is. Scans from the top index down, so on dense coefficient
/// tables it exits almost immediately.
inline bool degree_at_least(const Anf& g, int d) {
  const auto words = g.coeffs().words();
  for (std::size_t i = words.size(); i-- > 0;) {
    std::uint64_t w = words[i];
    while (w) {
      const int b = 63 - std::countl_zero(w);
      w &= ~(std::uint64_t{1} << b);
      if (std::popcount((std::uint64_t{i} << 6) | unsigned(b)) >= d)
        return true;
    }
  }
  return false;
}

namespace detail {

/// Indicator table of {v : v ⪰ u}, the set closed upward from u.
inline BitTable superset_table(const Valuation& u) {
  BitTable t = BitTable::ones(u.vars());
  auto words = t.words();
  for (int i = 0; i < u.vars(); ++i) {
    if (!((u.mask() >> i) & 1u)) continue;
    if (i < 6) {
      const std::uint64_t keep = ~kIndexBitClear[i];
      for (auto& w : words) w &= keep;
    } else {
      for (std::size_t j = 0; j < words.size(); ++j)
        if (!((j >> (i - 6)) & 1u)) words[j] = 0;
    }
  }
  t.mask_padding();
  return t;
}

}  // namespace detail

/// Truth table of the monomial x^u: 1 exactly on {a : a ⪰ u}.
inline BooleanFunction monomial_truth_table(const Valuation& u) {
  return BooleanFunction(detail::superset_table(u));
}

/// ANF of the minterm M_u (indicator of the single valuation u): the
/// monomials x^v for every v ⪰ u.
inline Anf minterm_anf(const Valuation& u) {
  return Anf(detail::superset_table(u));
}

inline BooleanFunction operator^(const BooleanFunction& a,
                                 const BooleanFunction& b) {
  return BooleanFunction(a.table() ^ b.table());
}

inline BooleanFunction operator&(const BooleanFunction& a,
                                 const BooleanFunction& b) {
  return BooleanFunction(a.table() & b.table());
}

inline Anf operator^(const Anf& a, const Anf& b) {
  return Anf(a.coeffs() ^ b.coeffs());
}

/// View f of n variables as a function of n+k variables that ignores the new
/// ones: the truth table repeats 2^k times.
inline BooleanFunction extend(const BooleanFunction& f, int k) {
  detail::require(k >= 0, "extension count must be nonnegative");
  const int n = f.vars();
  detail::checked_var_count(n + k);
  if (k == 0) return f;
  BitTable t(n + k);
  auto dst = t.words();
  const auto src = f.table().words();
  if (n >= 6) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i % src.size()];
  } else {
    std::uint64_t w = src[0];
    for (int s = n; s < 6 && s < n + k; ++s) w |= w << (1 << s);
    for (auto& d : dst) d = w;
    t.mask_padding();
  }
  return BooleanFunction(std::move(t));
}

/// The same embedding on coefficients: new-variable monomials are absent, so
/// the table is zero-padded above index 2^n.
inline Anf extend(const Anf& g, int k) {
  detail::require(k >= 0, "extension count must be nonnegative");
  const int n = g.vars();
  detail::checked_var_count(n + k);
  if (k == 0) return g;
  BitTable t(n + k);
  auto dst = t.words();
  const auto src = g.coeffs().words();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
  return Anf(std::move(t));
}

inline std::string to_hex(const BooleanFunction& f) { return to_hex(f.table()); }
inline std::string to_hex(const Anf& g) { return to_hex(g.coeffs()); }

inline BooleanFunction function_from_hex(std::string_view line) {
  return BooleanFunction(bit_table_from_hex(line));
}

inline BooleanFunction function_from_bits(std::string_view bits) {
  int n = 1;
  while ((std::size_t{1} << n) < bits.size()) ++n;
  return BooleanFunction(bit_table_from_bits(n, bits));
}

inline BooleanFunction function_from_word(int n, std::uint64_t bits) {
  return BooleanFunction(bit_table_from_word(n, bits));
}

}  // namespace boolfun
