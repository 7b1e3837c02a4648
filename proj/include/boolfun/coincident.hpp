#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"
#include "boolfun/decompose.hpp"
#include "boolfun/mobius.hpp"
#include "boolfun/rng.hpp"

namespace boolfun {

/// h_u = x^u XOR M_u: the indicator of the strict supersets of u. These are
/// coincident, and the ones with the top variable absent from u form a basis
/// of the fixed-point space.
inline BooleanFunction h_of(const Valuation& u) {
  BitTable t = detail::superset_table(u);
  t.set_bit(u.mask(), false);
  return BooleanFunction(std::move(t));
}

/// Every coincident function on n variables is phi(g) | g for exactly one g
/// on n-1 variables (Shannon halves along x_n).
inline BooleanFunction from_generator(const BooleanFunction& g) {
  detail::checked_var_count(g.vars() + 1);
  return shannon_join(phi(g), g);
}

inline BooleanFunction generator_of(const BooleanFunction& h) {
  detail::require(h.vars() >= 2, "generators exist for n >= 2 only");
  detail::require(is_coincident(h), "function is not coincident");
  return BooleanFunction(detail::upper_half(h.table()));
}

/// Uniform over the fixed points of the transform: uniform generator for
/// n >= 2, a fair pick from {0, x_1} for n = 1.
inline BooleanFunction random_coincident(int n, Rng& rng) {
  detail::checked_var_count(n);
  if (n == 1) {
    BitTable t(1);
    t.set_bit(1, random_bit(rng));
    return BooleanFunction(std::move(t));
  }
  return from_generator(random_function(n - 1, rng));
}

/// The 2^(n-1) basis functions h_a, a ranging over masks with x_n clear, in
/// ascending mask order.
inline std::vector<BooleanFunction> coincident_basis(int n) {
  detail::checked_var_count(n);
  std::vector<BooleanFunction> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t a = 0; a < count; ++a)
    out.push_back(h_of(Valuation(static_cast<std::uint32_t>(a), n)));
  return out;
}

/// Complement within the coincident space: h XOR phi(1), which flips h
/// everywhere except at 0_n. Coincident functions vanish at 0_n, so dual
/// weights pair up to 2^n - 1.
inline BooleanFunction dual(const BooleanFunction& h) {
  detail::require(is_coincident(h), "function is not coincident");
  return h ^ phi(BooleanFunction::ones(h.vars()));
}

/// Flip the coefficient of x_1...x_n; toggles the weight parity while staying
/// coincident.
inline BooleanFunction toggle_parity(const BooleanFunction& h) {
  detail::require(is_coincident(h), "function is not coincident");
  BitTable t = h.table();
  t.flip_bit(t.size() - 1);
  return BooleanFunction(std::move(t));
}

enum class Direction { up, down };

/// Monotone along every variable: up means x_i = 0 -> 1 never drops the
/// value, down the reverse. Checked pairwise per variable on whole words.
inline bool is_monotonic(const BooleanFunction& f,
                         Direction dir = Direction::up) {
  const auto words = f.table().words();
  const int n = f.vars();
  for (int i = 0; i < n && i < 6; ++i) {
    const std::uint64_t lower = kIndexBitClear[i];
    const int s = 1 << i;
    for (const auto& w : words) {
      const std::uint64_t lo = w & lower;
      const std::uint64_t hi = (w >> s) & lower;
      const std::uint64_t bad = dir == Direction::up ? lo & ~hi : hi & ~lo;
      if (bad) return false;
    }
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t s = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < words.size(); base += 2 * s)
      for (std::size_t j = 0; j < s; ++j) {
        const std::uint64_t lo = words[base + j];
        const std::uint64_t hi = words[base + s + j];
        const std::uint64_t bad = dir == Direction::up ? lo & ~hi : hi & ~lo;
        if (bad) return false;
      }
  }
  return true;
}

/// Minimal support points under the subset order, ascending by mask. Uses an
/// upward-closure pass (the OR analogue of the transform), then keeps the
/// support points none of whose immediate predecessors is already covered.
inline std::vector<Valuation> inf_set(const BooleanFunction& f) {
  BitTable reach = f.table();
  {
    auto words = reach.words();
    const int n = reach.vars();
    for (int i = 0; i < n && i < 6; ++i) {
      const std::uint64_t lower = kIndexBitClear[i];
      const int s = 1 << i;
      for (auto& w : words) w |= (w & lower) << s;
    }
    for (int i = 6; i < n; ++i) {
      const std::size_t s = std::size_t{1} << (i - 6);
      for (std::size_t base = 0; base < words.size(); base += 2 * s)
        for (std::size_t j = 0; j < s; ++j)
          words[base + s + j] |= words[base + j];
    }
  }
  std::vector<Valuation> out;
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    if (!f.bit(u)) continue;
    bool minimal = true;
    for (std::uint64_t rest = u; rest && minimal; rest &= rest - 1) {
      const std::uint64_t pred = u ^ (rest & (~rest + 1));
      minimal = !reach.bit(pred);
    }
    if (minimal)
      out.push_back(Valuation(static_cast<std::uint32_t>(u), f.vars()));
  }
  return out;
}

/// Coincident and monotone increasing: the function whose support is the
/// union of the strict up-sets of u and of its complement. For u outside
/// {0_n, 1_n} this equals h_u XOR h_comp(u) XOR x_1...x_n.
inline BooleanFunction monotone_coincident(const Valuation& u) {
  return BooleanFunction(h_of(u).table() | h_of(complement(u)).table());
}

/// All distinct monotone_coincident functions and their duals, sorted.
struct MonotoneFamily {
  std::vector<BooleanFunction> functions;
  std::uint64_t constructed = 0;  // 2^(n+1) before deduplication
};

inline MonotoneFamily monotone_family(int n) {
  detail::checked_var_count(n);
  MonotoneFamily fam;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const BooleanFunction f =
        monotone_coincident(Valuation(static_cast<std::uint32_t>(m), n));
    fam.functions.push_back(f);
    fam.functions.push_back(dual(f));
    fam.constructed += 2;
  }
  std::sort(fam.functions.begin(), fam.functions.end());
  fam.functions.erase(
      std::unique(fam.functions.begin(), fam.functions.end()),
      fam.functions.end());
  return fam;
}

}  // namespace boolfun
