#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <cstdint>

#include "boolfun/boolean_function.hpp"
#include "boolfun/rng.hpp"

namespace {

using namespace boolfun;

// Reference ANF evaluation: xor the coefficients of all monomials the
// valuation turns on, one by one.
bool evaluate_anf_slow(const Anf& g, std::uint32_t a) {
  bool v = false;
  for (std::uint32_t u = 0; u < g.size(); ++u)
    if (g.bit(u) && (u & a) == u) v ^= true;
  return v;
}

int degree_slow(const Anf& g) {
  int d = -1;
  for (std::uint32_t u = 0; u < g.size(); ++u)
    if (g.bit(u)) d = std::max(d, std::popcount(u));
  return d;
}

Anf random_anf(int n, Rng& rng) { return Anf(random_bit_table(n, rng)); }

}  // namespace

TEST_CASE("evaluation reads the truth table", "[function]") {
  const BooleanFunction f = function_from_bits("0110");
  CHECK_FALSE(evaluate(f, Valuation(0, 2)));
  CHECK(evaluate(f, Valuation(1, 2)));
  CHECK(evaluate(f, Valuation(2, 2)));
  CHECK_FALSE(evaluate(f, Valuation(3, 2)));
  CHECK_THROWS_AS(evaluate(f, Valuation(0, 3)), std::invalid_argument);
}

TEST_CASE("anf evaluation xors coefficients below the point", "[function]") {
  // g = x_2 + x_1 + x_1 x_2 evaluated where both variables are 1
  const Anf g(bit_table_from_bits(2, "0111"));
  CHECK(evaluate_anf(g, Valuation(3, 2)) == true);
  CHECK(evaluate_anf(g, Valuation(0, 2)) == false);
  CHECK(evaluate_anf(g, Valuation(1, 2)) == true);

  Rng rng = seeded_rng(23);
  for (int n = 1; n <= 8; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      const Anf h = random_anf(n, rng);
      for (std::uint32_t a = 0; a < h.size(); ++a)
        CHECK(evaluate_anf(h, Valuation(a, n)) == evaluate_anf_slow(h, a));
    }
}

TEST_CASE("monomials and minterms match their defining predicates",
          "[function]") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      const BooleanFunction xu = monomial_truth_table(Valuation(u, n));
      const Anf mt = minterm_anf(Valuation(u, n));
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        const bool u_below_a = (u & a) == u;
        CHECK(evaluate(xu, Valuation(a, n)) == u_below_a);
        CHECK(evaluate_anf(mt, Valuation(a, n)) == (a == u));
      }
    }
}

TEST_CASE("degree scans the top populated monomial", "[function]") {
  CHECK_FALSE(degree(Anf::zeros(4)).has_value());
  CHECK(degree(Anf(bit_table_from_bits(2, "1000"))) == 0);
  CHECK(degree(Anf(bit_table_from_bits(2, "0001"))) == 2);
  CHECK(degree(Anf(bit_table_from_bits(3, "01100000"))) == 1);

  Rng rng = seeded_rng(29);
  for (int n = 1; n <= 9; ++n)
    for (int rep = 0; rep < 6; ++rep) {
      const Anf g = random_anf(n, rng);
      const int slow = degree_slow(g);
      const auto fast = degree(g);
      if (slow < 0) {
        CHECK_FALSE(fast.has_value());
      } else {
        REQUIRE(fast.has_value());
        CHECK(*fast == slow);
      }
      for (int d = 0; d <= n; ++d)
        CHECK(degree_at_least(g, d) == (slow >= d));
      CHECK(degree_at_least(g, 0) == (slow >= 0));
    }
}

TEST_CASE("xor and and behave pointwise", "[function]") {
  Rng rng = seeded_rng(31);
  const BooleanFunction f = random_function(7, rng);
  const BooleanFunction g = random_function(7, rng);
  const BooleanFunction fx = f ^ g;
  const BooleanFunction fa = f & g;
  CHECK(weight(fx) == weight(f) + weight(g) - 2 * weight(fa));
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    CHECK(fx.bit(a) == (f.bit(a) ^ g.bit(a)));
    CHECK(fa.bit(a) == (f.bit(a) && g.bit(a)));
  }
}

TEST_CASE("extension repeats the truth table", "[function]") {
  Rng rng = seeded_rng(37);
  for (int n : {1, 2, 3, 5, 6, 8}) {
    const BooleanFunction f = random_function(n, rng);
    for (int k : {0, 1, 2, 3}) {
      const BooleanFunction e = extend(f, k);
      CHECK(e.vars() == n + k);
      CHECK(weight(e) == (std::uint64_t{1} << k) * weight(f));
      // the new variables are ignored
      for (int rep = 0; rep < 200; ++rep) {
        const std::uint32_t a =
            static_cast<std::uint32_t>(rng()) & ((1u << (n + k)) - 1);
        CHECK(evaluate(e, Valuation(a, n + k)) ==
              evaluate(f, Valuation(a & ((1u << n) - 1), n)));
      }
    }
  }
}

TEST_CASE("anf extension keeps coefficients in place", "[function]") {
  Rng rng = seeded_rng(41);
  const Anf g = random_anf(5, rng);
  const Anf e = extend(g, 2);
  CHECK(monomial_count(e) == monomial_count(g));
  for (std::uint32_t u = 0; u < e.size(); ++u)
    CHECK(e.bit(u) == (u < g.size() && g.bit(u)));
}

TEST_CASE("hex helpers cover functions and forms", "[function]") {
  const BooleanFunction f = function_from_hex("n=2:6");
  CHECK(to_hex(f) == "n=2:6");
  CHECK(weight(f) == 2);
  CHECK(function_from_word(2, 0b0110) == f);
  CHECK(to_hex(Anf(bit_table_from_bits(2, "0110"))) == "n=2:6");
}
