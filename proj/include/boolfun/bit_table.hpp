#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolfun {

/// Hard cap on variable count; 2^28 bits = 32 MiB per table.
#ifndef BOOLFUN_MAX_VARS
#define BOOLFUN_MAX_VARS 28
#endif
inline constexpr int kMaxVars = BOOLFUN_MAX_VARS;

inline constexpr int kWordBits = 64;

/// Word-local masks selecting positions whose index bit i is clear, i < 6.
/// ~kIndexBitClear[i] selects positions whose index bit i is set.
inline constexpr std::uint64_t kIndexBitClear[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

/// u ⪯ v in the subset order on bit masks.
constexpr bool is_submask(std::uint64_t u, std::uint64_t v) noexcept {
  return (u & ~v) == 0;
}

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

inline int checked_var_count(int n) {
  require(n >= 1 && n <= kMaxVars, "variable count out of range");
  return n;
}

}  // namespace detail

/// A point of K_2^n: assignment of x_1..x_n packed as a mask, x_i at bit i-1.
class Valuation {
 public:
  Valuation(std::uint32_t mask, int n)
      : mask_(mask), n_(detail::checked_var_count(n)) {
    detail::require(n >= 32 || mask < (std::uint32_t{1} << n),
                    "valuation mask exceeds 2^n");
  }

  std::uint32_t mask() const noexcept { return mask_; }
  int vars() const noexcept { return n_; }
  /// Value of x_i, 1-based.
  bool operator[](int i) const noexcept { return (mask_ >> (i - 1)) & 1u; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::uint32_t mask_;
  int n_;
};

inline int weight(const Valuation& u) noexcept {
  return std::popcount(u.mask());
}

/// u ⪯ v: every variable set in u is set in v. Defined within one K_2^n.
inline bool precedes(const Valuation& u, const Valuation& v) {
  detail::require(u.vars() == v.vars(), "valuations live in different K_2^n");
  return is_submask(u.mask(), v.mask());
}

inline bool strictly_precedes(const Valuation& u, const Valuation& v) {
  return precedes(u, v) && u.mask() != v.mask();
}

inline Valuation complement(const Valuation& u) {
  const std::uint32_t full =
      u.vars() >= 32 ? ~std::uint32_t{0}
                     : (std::uint32_t{1} << u.vars()) - 1;
  return Valuation(u.mask() ^ full, u.vars());
}

/// 2^n bits indexed by valuation mask, packed into 64-bit words little-endian
/// (bit k lives in word k/64 at position k%64). For n < 6 the unused high
/// bits of the single word are kept zero, so word-wise equality is semantic
/// equality.
class BitTable {
 public:
  explicit BitTable(int n)
      : n_(detail::checked_var_count(n)),
        words_(std::size_t{1} << (n < 6 ? 0 : n - 6), 0) {}

  static BitTable zeros(int n) { return BitTable(n); }

  static BitTable ones(int n) {
    BitTable t(n);
    std::fill(t.words_.begin(), t.words_.end(), ~std::uint64_t{0});
    t.mask_padding();
    return t;
  }

  int vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

  bool bit(std::uint64_t idx) const noexcept {
    return (words_[idx >> 6] >> (idx & 63)) & 1u;
  }
  void set_bit(std::uint64_t idx, bool v) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (idx & 63);
    if (v)
      words_[idx >> 6] |= m;
    else
      words_[idx >> 6] &= ~m;
  }
  void flip_bit(std::uint64_t idx) noexcept {
    words_[idx >> 6] ^= std::uint64_t{1} << (idx & 63);
  }

  std::uint64_t count() const noexcept {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Zero out storage bits at positions >= 2^n (only exist for n < 6).
  void mask_padding() noexcept {
    if (n_ < 6) words_[0] &= (std::uint64_t{1} << size()) - 1;
  }

  BitTable& operator^=(const BitTable& o) {
    detail::require(n_ == o.n_, "bit tables have different sizes");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitTable& operator&=(const BitTable& o) {
    detail::require(n_ == o.n_, "bit tables have different sizes");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitTable& operator|=(const BitTable& o) {
    detail::require(n_ == o.n_, "bit tables have different sizes");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend BitTable operator^(BitTable a, const BitTable& b) { return a ^= b; }
  friend BitTable operator&(BitTable a, const BitTable& b) { return a &= b; }
  friend BitTable operator|(BitTable a, const BitTable& b) { return a |= b; }

  friend bool operator==(const BitTable&, const BitTable&) = default;
  friend auto operator<=>(const BitTable&, const BitTable&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

/// Table from the low 2^n bits of a word; n <= 6. Bit k of `bits` is index k.
inline BitTable bit_table_from_word(int n, std::uint64_t bits) {
  detail::require(n >= 1 && n <= 6, "bit_table_from_word needs n <= 6");
  BitTable t(n);
  t.words()[0] = bits;
  t.mask_padding();
  return t;
}

/// Table from "0110"-style text, index 0 first.
inline BitTable bit_table_from_bits(int n, std::string_view bits) {
  BitTable t(n);
  detail::require(bits.size() == t.size(), "bit string length is not 2^n");
  for (std::uint64_t k = 0; k < t.size(); ++k) {
    if (bits[k] == '1')
      t.set_bit(k, true);
    else
      detail::require(bits[k] == '0', "bit string has characters besides 0/1");
  }
  return t;
}

inline std::string to_bit_string(const BitTable& t) {
  std::string s(t.size(), '0');
  for (std::uint64_t k = 0; k < t.size(); ++k)
    if (t.bit(k)) s[k] = '1';
  return s;
}

namespace detail {

inline constexpr char kHexDigits[] = "0123456789abcdef";

// Nibble with its bit order reversed: table order t_0 t_1 t_2 t_3 vs the
// numeral's msb-first digit value.
inline constexpr unsigned kNibbleReverse[16] = {0, 8,  4, 12, 2, 10, 6, 14,
                                                1, 9,  5, 13, 3, 11, 7, 15};

inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace detail

/// Number of hex digits in the serialized form of an n-variable table.
inline std::uint64_t hex_width(int n) {
  return n == 1 ? 1 : (std::uint64_t{1} << n) / 4;
}

/// Serialize as "n=<n>:<hex>". The bit string t_0 t_1 ... is read as a binary
/// numeral with t_0 most significant and printed msb-first in lowercase hex,
/// zero-padded to hex_width(n) digits.
inline std::string to_hex(const BitTable& t) {
  const int n = t.vars();
  std::string out = "n=" + std::to_string(n) + ":";
  if (n == 1) {
    const unsigned v = (t.bit(0) << 1) | unsigned{t.bit(1)};
    out += detail::kHexDigits[v];
    return out;
  }
  out.reserve(out.size() + hex_width(n));
  for (std::uint64_t w : t.words()) {
    const std::uint64_t nibbles = std::min<std::uint64_t>(16, t.size() / 4);
    for (std::uint64_t q = 0; q < nibbles; ++q)
      out += detail::kHexDigits[detail::kNibbleReverse[(w >> (4 * q)) & 15]];
  }
  return out;
}

/// Parse "n=<n>:<hex>". Fewer digits than hex_width(n) mean leading zeros of
/// the numeral; more digits, or bits beyond 2^n, are rejected.
inline BitTable bit_table_from_hex(std::string_view line) {
  const auto fail = [] { throw std::invalid_argument("malformed hex line"); };
  if (line.substr(0, 2) != "n=") fail();
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) fail();
  int n = 0;
  for (char c : line.substr(2, colon - 2)) {
    if (c < '0' || c > '9' || n > kMaxVars) fail();
    n = n * 10 + (c - '0');
  }
  detail::require(n >= 1 && n <= kMaxVars, "variable count out of range");

  std::string_view hex = line.substr(colon + 1);
  const std::uint64_t width = hex_width(n);
  if (hex.empty() || hex.size() > width) fail();

  BitTable t(n);
  if (n == 1) {
    const int v = detail::hex_value(hex[0]);
    if (v < 0 || v > 3) fail();
    t.set_bit(0, (v >> 1) & 1);
    t.set_bit(1, v & 1);
    return t;
  }
  // Digit q (msb-first, right-aligned to `width`) covers indices 4q..4q+3.
  const std::uint64_t pad = width - hex.size();
  auto words = t.words();
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const int v = detail::hex_value(hex[j]);
    if (v < 0) fail();
    const std::uint64_t q = pad + j;
    words[q >> 4] |=
        std::uint64_t{detail::kNibbleReverse[v]} << (4 * (q & 15));
  }
  return t;
}

}  // namespace boolfun
