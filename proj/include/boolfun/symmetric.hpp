#pragma once

#include <bit>
#include <bitset>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"
#include "boolfun/rng.hpp"

namespace boolfun {

/// Symmetric-function machinery works on weight-indexed vectors of n+1 bits;
/// n may exceed kMaxVars as long as no truth table is materialized.
inline constexpr int kMaxSymmetricVars = 64;

/// C(k, j) mod 2, by Lucas: odd exactly when j is a submask of k.
constexpr bool binom_odd(std::uint64_t k, std::uint64_t j) noexcept {
  return is_submask(j, k);
}

namespace detail {

inline int checked_sym_vars(int n) {
  require(n >= 1 && n <= kMaxSymmetricVars,
          "symmetric variable count out of range");
  return n;
}

using SymBits = std::bitset<kMaxSymmetricVars + 1>;

/// XOR-accumulate over submasks: out_j = XOR of in_k for k ⪯ j. Involution.
inline SymBits submask_fold(const SymBits& in, int n) {
  SymBits out;
  for (int j = 0; j <= n; ++j) {
    unsigned acc = 0;
    std::uint32_t k = static_cast<std::uint32_t>(j);
    while (true) {
      acc ^= unsigned{in[k]};
      if (k == 0) break;
      k = (k - 1) & static_cast<std::uint32_t>(j);
    }
    out[j] = acc & 1;
  }
  return out;
}

}  // namespace detail

/// Coefficients of f = XOR of lambda_k * Sigma_k, where Sigma_k is the XOR of
/// all degree-k monomials. Entry k lives at index k, 0 <= k <= n.
class LambdaVector {
 public:
  explicit LambdaVector(int n) : n_(detail::checked_sym_vars(n)) {}

  int vars() const noexcept { return n_; }
  bool operator[](int k) const { return bits_[k]; }
  void set(int k, bool v) {
    detail::require(k >= 0 && k <= n_, "lambda index out of range");
    bits_[k] = v;
  }
  const detail::SymBits& bits() const noexcept { return bits_; }

  LambdaVector& operator^=(const LambdaVector& o) {
    detail::require(n_ == o.n_, "lambda vectors have different arity");
    bits_ ^= o.bits_;
    return *this;
  }
  friend LambdaVector operator^(LambdaVector a, const LambdaVector& b) {
    return a ^= b;
  }
  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;

 private:
  friend class ValueVector;
  friend LambdaVector values_to_lambda(const class ValueVector&);
  int n_;
  detail::SymBits bits_;
};

/// Values of a symmetric function by argument weight: entry j is f at any
/// point of weight j.
class ValueVector {
 public:
  explicit ValueVector(int n) : n_(detail::checked_sym_vars(n)) {}

  int vars() const noexcept { return n_; }
  bool operator[](int j) const { return bits_[j]; }
  void set(int j, bool v) {
    detail::require(j >= 0 && j <= n_, "value index out of range");
    bits_[j] = v;
  }
  const detail::SymBits& bits() const noexcept { return bits_; }

  friend bool operator==(const ValueVector&, const ValueVector&) = default;

 private:
  friend class LambdaVector;
  friend ValueVector lambda_to_values(const LambdaVector&);
  int n_;
  detail::SymBits bits_;
};

/// v_j = XOR of lambda_k over k ⪯ j: Sigma_k takes value C(j, k) mod 2 on a
/// weight-j point.
inline ValueVector lambda_to_values(const LambdaVector& l) {
  ValueVector v(l.vars());
  v.bits_ = detail::submask_fold(l.bits(), l.vars());
  return v;
}

/// The fold is an involution, so the inverse runs the same pass.
inline LambdaVector values_to_lambda(const ValueVector& v) {
  LambdaVector l(v.vars());
  l.bits_ = detail::submask_fold(v.bits(), v.vars());
  return l;
}

/// Materialize the truth table (needs n <= kMaxVars).
inline BooleanFunction symmetric_to_function(const LambdaVector& l) {
  detail::checked_var_count(l.vars());
  const ValueVector v = lambda_to_values(l);
  BitTable t(l.vars());
  for (std::uint64_t m = 0; m < t.size(); ++m)
    if (v[std::popcount(m)]) t.set_bit(m, true);
  return BooleanFunction(std::move(t));
}

inline bool is_symmetric(const BooleanFunction& f) {
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    const std::uint64_t rep = (std::uint64_t{1} << std::popcount(m)) - 1;
    if (f.bit(m) != f.bit(rep)) return false;
  }
  return true;
}

inline ValueVector value_vector_of(const BooleanFunction& f) {
  detail::require(is_symmetric(f), "function is not symmetric");
  ValueVector v(f.vars());
  for (int j = 0; j <= f.vars(); ++j)
    v.set(j, f.bit((std::uint64_t{1} << j) - 1));
  return v;
}

inline LambdaVector lambda_of(const BooleanFunction& f) {
  return values_to_lambda(value_vector_of(f));
}

/// Lambda vector of transform(Sigma_k on n variables): entry j is
/// C(j, k) mod 2. The transform of a symmetric function is symmetric, and on
/// lambda/value vectors it just swaps the two representations.
inline LambdaVector mu_sigma(int k, int n) {
  detail::checked_sym_vars(n);
  detail::require(k >= 0 && k <= n, "degree index out of range");
  LambdaVector l(n);
  for (int j = 0; j <= n; ++j)
    l.set(j, binom_odd(static_cast<std::uint64_t>(j),
                       static_cast<std::uint64_t>(k)));
  return l;
}

/// Symmetric f is coincident iff for every j the lambda entries over the
/// proper submasks of j cancel; equivalently v_j = lambda_j for all j.
inline bool is_coincident_lambda(const LambdaVector& l) {
  for (int j = 0; j <= l.vars(); ++j) {
    unsigned acc = 0;
    std::uint32_t k = static_cast<std::uint32_t>(j);
    while (k != 0) {
      k = (k - 1) & static_cast<std::uint32_t>(j);
      acc ^= unsigned{l[static_cast<int>(k)]};
      if (k == 0) break;
    }
    if (acc & 1) return false;
  }
  return true;
}

inline std::uint64_t coincident_symmetric_count(int n) {
  detail::checked_sym_vars(n);
  return std::uint64_t{1} << (n / 2 + 1);
}

/// Visit every coincident symmetric lambda vector in lexicographic order
/// (lambda_0 varies slowest). Depth-first with pruning: position j is only
/// entered once the cancellation condition at j holds for the prefix.
template <typename Fn>
void for_each_coincident_symmetric(int n, Fn&& fn) {
  detail::checked_sym_vars(n);
  LambdaVector l(n);
  const auto prefix_ok = [&l](int j) {
    unsigned acc = 0;
    std::uint32_t k = static_cast<std::uint32_t>(j);
    while (k != 0) {
      k = (k - 1) & static_cast<std::uint32_t>(j);
      acc ^= unsigned{l[static_cast<int>(k)]};
      if (k == 0) break;
    }
    return (acc & 1) == 0;
  };
  const auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      fn(static_cast<const LambdaVector&>(l));
      return;
    }
    if (!prefix_ok(j)) return;
    l.set(j, false);
    self(self, j + 1);
    l.set(j, true);
    self(self, j + 1);
    l.set(j, false);
  };
  rec(rec, 0);
}

inline std::vector<LambdaVector> enumerate_coincident_symmetric(int n) {
  std::vector<LambdaVector> out;
  for_each_coincident_symmetric(n, [&](const LambdaVector& l) {
    out.push_back(l);
  });
  return out;
}

/// Uniform over the coincident symmetric functions. Even positions are free;
/// before filling an odd position m, the previous entry is flipped if the
/// cancellation condition at m demands it (m-1 is always a submask of odd m,
/// so the flip lands the prefix back in the solution set).
inline LambdaVector random_coincident_symmetric(int n, Rng& rng) {
  detail::checked_sym_vars(n);
  LambdaVector l(n);
  if (n >= 1) l.set(1, random_bit(rng));
  for (int m = 2; m <= n; ++m) {
    if (m % 2 == 1) {
      unsigned acc = 0;
      std::uint32_t k = static_cast<std::uint32_t>(m);
      while (k != 0) {
        k = (k - 1) & static_cast<std::uint32_t>(m);
        acc ^= unsigned{l[static_cast<int>(k)]};
        if (k == 0) break;
      }
      if (acc & 1) l.set(m - 1, !l[m - 1]);
    }
    l.set(m, random_bit(rng));
  }
  return l;
}

/// Serialize as "λ=<bits>", lambda_0 first.
inline std::string to_lambda_string(const LambdaVector& l) {
  std::string s = "λ=";
  for (int k = 0; k <= l.vars(); ++k) s += l[k] ? '1' : '0';
  return s;
}

inline LambdaVector lambda_from_string(std::string_view line) {
  const std::string_view prefix = "λ=";
  detail::require(line.substr(0, prefix.size()) == prefix,
                  "lambda line must start with λ=");
  const std::string_view bits = line.substr(prefix.size());
  detail::require(bits.size() >= 2 &&
                      bits.size() <= std::size_t{kMaxSymmetricVars} + 1,
                  "lambda bit count out of range");
  LambdaVector l(static_cast<int>(bits.size()) - 1);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    detail::require(bits[k] == '0' || bits[k] == '1',
                    "lambda string has characters besides 0/1");
    l.set(static_cast<int>(k), bits[k] == '1');
  }
  return l;
}

}  // namespace boolfun
