#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "stod/gf2m.hpp"

using namespace stod;

TEST_CASE("GF(8) worked examples")
{
  Field const f(3);
  CHECK(f.polynomial() == 0xBu);
  CHECK(f.n() == 1u);
  CHECK(f.theta_exponent() == 4u);
  CHECK(f.half_theta_exponent() == 2u);

  CHECK(f.add(Elem{0b011}, Elem{0b101}) == Elem{0b110});
  CHECK(f.mul(Elem{0b010}, Elem{0b100}) == Elem{0b011});
  CHECK(oracle::mul(0b010, 0b100, 0xB) == 0b011u);

  CHECK(f.inv(Elem{0b010}) == Elem{0b101});
  CHECK(oracle::brute_inverse(0b010, 0xB) == 0b101u);

  CHECK(f.pow(Elem{0b010}, 7) == f.one());
  CHECK(oracle::pow(0b010, 7, 0xB) == 1u);

  CHECK(f.theta(Elem{0b010}) == Elem{0b110});
  CHECK(oracle::mul(oracle::mul(0b010, 0b010, 0xB), oracle::mul(0b010, 0b010, 0xB), 0xB) ==
        0b110u);
  CHECK(f.theta(f.zero()) == f.zero());
  CHECK(f.theta(f.one()) == f.one());
  CHECK(f.inv(f.one()) == f.one());
}

TEST_CASE("identities and annihilator")
{
  Field const f(5);
  for (Elem a : f.elements()) {
    CHECK(f.add(f.zero(), a) == a);
    CHECK(f.add(a, a) == f.zero());
    CHECK(f.mul(f.one(), a) == a);
    CHECK(f.mul(a, f.zero()) == f.zero());
    CHECK(f.pow(a, 1) == a);
    if (a.bits != 0u)
      CHECK(f.pow(a, 0) == f.one());
  }
}

TEST_CASE("errors")
{
  Field const f(3);
  CHECK_THROWS_WITH_AS(f.inv(f.zero()), "division by zero in GF(q)", std::domain_error);
  CHECK_THROWS_AS(f.pow(f.zero(), -1), std::domain_error);
  CHECK_THROWS_AS(f.element(8), std::out_of_range);
  CHECK_THROWS_AS(Field(3, 0x9u), std::invalid_argument);  // x^3+1 = (x+1)(x^2+x+1)
  CHECK_THROWS_AS(Field(3, 0x13u), std::invalid_argument); // degree 4
  CHECK_THROWS_AS(Field(4), std::invalid_argument);
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(2), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(16), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(10), std::invalid_argument);
  CHECK_NOTHROW(Field(3, 0xDu));
}

TEST_CASE("admissible orders")
{
  CHECK(is_admissible_order(8));
  CHECK(is_admissible_order(32));
  CHECK(is_admissible_order(128));
  CHECK_FALSE(is_admissible_order(2));
  CHECK_FALSE(is_admissible_order(4));
  CHECK_FALSE(is_admissible_order(10));
  CHECK_FALSE(is_admissible_order(64));
}

TEST_CASE("enumerate_field")
{
  auto const e8 = Field(3).elements();
  REQUIRE(e8.size() == 8u);
  CHECK(e8.front() == Elem{0});
  CHECK(e8.back() == Elem{0b111});
  CHECK(Field(5).elements().size() == 32u);
}

TEST_CASE("irreducibility test agrees with trial division")
{
  for (unsigned m : {3u, 5u, 7u, 9u}) {
    for (std::uint64_t p = std::uint64_t{1} << m; p < std::uint64_t{2} << m; ++p)
      CHECK_MESSAGE(is_irreducible(p, m) == oracle::irreducible(p), "poly " << p);
  }
}

TEST_CASE("default polynomials are irreducible")
{
  for (unsigned m : {3u, 5u, 7u, 9u, 11u, 13u}) {
    auto p = default_polynomial(m);
    REQUIRE(p);
    CHECK(oracle::irreducible(*p));
    CHECK(oracle::degree(*p) == m);
  }
  // Least irreducible of degree 3, 5, 7, 11, 13 by value.
  for (unsigned m : {3u, 5u, 7u, 11u, 13u}) {
    std::uint64_t least = std::uint64_t{1} << m;
    while (!oracle::irreducible(least))
      ++least;
    CHECK(*default_polynomial(m) == least);
  }
}

TEST_CASE("field axioms, exhaustive at q = 8")
{
  for (std::uint64_t poly : {0xBu, 0xDu}) {
    Field const f(3, poly);
    auto const el = f.elements();
    for (Elem a : el)
      for (Elem b : el) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, b).bits == oracle::mul(a.bits, b.bits, poly));
        for (Elem c : el) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
  }
}

TEST_CASE("inverse: pow route, Euclid and exhaustive search agree")
{
  for (unsigned m : {3u, 5u}) {
    Field const f(m);
    for (Elem a : f.elements()) {
      if (a.bits == 0u)
        continue;
      Elem const b = f.inv(a);
      CHECK(f.mul(a, b) == f.one());
      CHECK(b.bits == oracle::euclid_inverse(a.bits, f.polynomial()));
      CHECK(b.bits == *oracle::brute_inverse(a.bits, f.polynomial()));
      CHECK(f.pow(a, -1) == b);
      CHECK(f.pow(a, static_cast<std::int64_t>(f.order() - 1u)) == f.one());
    }
  }
}

TEST_CASE("theta is the Tits automorphism")
{
  for (unsigned m : {3u, 5u}) {
    Field const f(m);
    auto const el = f.elements();
    for (Elem a : el) {
      CHECK(f.theta(f.theta(a)) == f.mul(a, a));
      CHECK(f.theta(a) == f.pow(a, static_cast<std::int64_t>(f.theta_exponent())));
      CHECK(f.mul(f.theta(a), f.theta(a)) ==
            f.pow(a, static_cast<std::int64_t>(std::uint64_t{1} << (f.n() + 2u))));
    }
    CHECK(f.theta_exponent() * f.theta_exponent() == 2u * f.order());
    CHECK(f.half_theta_exponent() * 2u == f.theta_exponent());
  }

  Field const f8(3);
  for (Elem a : f8.elements())
    for (Elem b : f8.elements()) {
      CHECK(f8.theta(f8.add(a, b)) == f8.add(f8.theta(a), f8.theta(b)));
      CHECK(f8.theta(f8.mul(a, b)) == f8.mul(f8.theta(a), f8.theta(b)));
    }

  Field const f32(5);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0u, 31u);
  for (int i = 0; i < 10000; ++i) {
    Elem const a{pick(rng)};
    Elem const b{pick(rng)};
    REQUIRE(f32.theta(f32.add(a, b)) == f32.add(f32.theta(a), f32.theta(b)));
    REQUIRE(f32.theta(f32.mul(a, b)) == f32.mul(f32.theta(a), f32.theta(b)));
  }
}

TEST_CASE("table and schoolbook multiplication agree")
{
  for (unsigned m : {3u, 5u, 7u}) {
    Field const tab(m);
    Field const plain(m, std::nullopt, false);
    REQUIRE(tab.has_tables());
    REQUIRE_FALSE(plain.has_tables());
    for (Elem a : tab.elements())
      for (Elem b : tab.elements())
        REQUIRE(tab.mul(a, b) == plain.mul(a, b));
  }
}

TEST_CASE("primitive element")
{
  Field const f8(3);
  CHECK(f8.primitive_element() == Elem{0b010});
  CHECK(f8.multiplicative_order(f8.one()) == 1u);
  Field const f9(9);
  Elem const z = f9.primitive_element();
  CHECK(f9.multiplicative_order(z) == 511u);
  std::uint64_t brute = 1u;
  for (Elem x = z; x != f9.one(); x = f9.mul(x, z))
    ++brute;
  CHECK(brute == 511u);
}
