#pragma once

#include <cstdint>
#include <random>

#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"

namespace boolfun {

/// All randomized routines take one of these; mt19937_64 keeps seeded streams
/// identical across platforms and standard library versions.
using Rng = std::mt19937_64;

/// Mixes a seed and a worker index into a stream seed far from both inputs.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline Rng seeded_rng(std::uint64_t seed) { return Rng(seed); }

/// Independent stream for worker w of a seeded run; worker 0 with one job
/// reproduces the same stream as any other partitioning of the work.
inline Rng worker_rng(std::uint64_t seed, std::uint64_t w) {
  return Rng(splitmix64(seed ^ splitmix64(w)));
}

inline bool random_bit(Rng& rng) { return rng() & 1u; }

inline BitTable random_bit_table(int n, Rng& rng) {
  BitTable t(n);
  for (auto& w : t.words()) w = rng();
  t.mask_padding();
  return t;
}

/// Uniform over all 2^(2^n) functions.
inline BooleanFunction random_function(int n, Rng& rng) {
  return BooleanFunction(random_bit_table(n, rng));
}

}  // namespace boolfun
