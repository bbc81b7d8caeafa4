#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "stod/errors.hpp"
#include "stod/suzuki.hpp"

using namespace stod;

namespace
{

std::vector<std::uint64_t> key(Mat4 const &m)
{
  std::vector<std::uint64_t> k;
  for (auto const &row : m.rows)
    for (Elem e : row)
      k.push_back(e.bits);
  return k;
}

Vec4 vec(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
{
  return Vec4{Elem{a}, Elem{b}, Elem{c}, Elem{d}};
}

} // namespace

TEST_CASE("generator matrices")
{
  Field const f(3);
  Mat4 const e = Mat4::identity();
  CHECK(gen_s(f, f.zero(), f.zero()) == e);
  CHECK(gen_m(f, f.one()) == e);
  CHECK(mat_mul(f, gen_tau(), gen_tau()) == e);
  CHECK_THROWS_AS(gen_m(f, f.zero()), std::invalid_argument);

  // s(x,y) entry by entry, built from unit matrices.
  for (Elem x : f.elements())
    for (Elem y : f.elements()) {
      Elem const x1t = f.mul(x, f.theta(x));
      Mat4 want = e;
      want = mat_add(f, want, mat_scale(f, x, Mat4::unit(2, 1)));
      want = mat_add(f, want, mat_scale(f, y, Mat4::unit(3, 1)));
      want = mat_add(f, want, mat_scale(f, f.theta(x), Mat4::unit(3, 2)));
      Elem const x2t = f.mul(x, x1t);
      want = mat_add(f, want, mat_scale(f, f.add(f.add(x2t, f.mul(x, y)), f.theta(y)),
                                        Mat4::unit(4, 1)));
      want = mat_add(f, want, mat_scale(f, f.add(x1t, y), Mat4::unit(4, 2)));
      want = mat_add(f, want, mat_scale(f, x, Mat4::unit(4, 3)));
      CHECK(gen_s(f, x, y) == want);
    }

  Mat4 tau;
  for (auto [i, j] : {std::pair{1u, 4u}, {2u, 3u}, {3u, 2u}, {4u, 1u}})
    tau = mat_add(f, tau, Mat4::unit(i, j));
  CHECK(gen_tau() == tau);
}

TEST_CASE("entry (4,1) of s(x,y) needs x^(2+theta)")
{
  // With x^(1+theta) in place of x^(2+theta) the matrix leaves the ovoid
  // whenever x is not in GF(2).
  Field const f(3);
  Ovoid const o(f);
  for (Elem x : f.elements()) {
    Mat4 alt = gen_s(f, x, f.zero());
    alt.at(4, 1) = one_plus_theta(f, x);
    bool leaves = false;
    for (Index i = 0u; i < o.size() && !leaves; ++i)
      leaves = !o.index_of(act(f, o.proj(i), alt)).has_value();
    CHECK(leaves == (x.bits > 1u));
  }
}

TEST_CASE("s multiplication law and involutions in Q, q = 8")
{
  Field const f(3);
  for (Elem x : f.elements())
    for (Elem y : f.elements()) {
      Mat4 const sxy = gen_s(f, x, y);
      bool const involution = mat_mul(f, sxy, sxy) == Mat4::identity();
      // s(0,y) for y != 0 are exactly the involutions of Q.
      CHECK(involution == (x.bits == 0u));
      for (Elem z : f.elements())
        for (Elem t : f.elements())
          REQUIRE(mat_mul(f, sxy, gen_s(f, z, t)) ==
                  gen_s(f, f.add(x, z), f.add(f.add(y, t), f.mul(f.theta(x), z))));
    }
}

TEST_CASE("m(k) conjugation and M cyclic, q = 8")
{
  Field const f(3);
  for (Elem k : f.elements()) {
    if (k.bits == 0u)
      continue;
    Mat4 const m = gen_m(f, k);
    Mat4 const minv = mat_inverse(f, m);
    for (Elem x : f.elements())
      for (Elem y : f.elements())
        REQUIRE(mat_mul(f, mat_mul(f, minv, gen_s(f, x, y)), m) ==
                gen_s(f, f.mul(x, k), f.mul(y, one_plus_theta(f, k))));
    for (Elem mu : f.elements())
      if (mu.bits != 0u)
        CHECK(mat_mul(f, m, gen_m(f, mu)) == gen_m(f, f.mul(k, mu)));
  }
}

TEST_CASE("Q0 is the centre and the derived subgroup of Q, q = 8")
{
  Field const f(3);
  std::set<std::vector<std::uint64_t>> q0;
  for (Elem y : f.elements())
    q0.insert(key(gen_s(f, f.zero(), y)));

  std::set<std::vector<std::uint64_t>> commutators;
  for (Elem a : f.elements())
    for (Elem b : f.elements()) {
      Mat4 const g = gen_s(f, a, b);
      Mat4 const gi = mat_inverse(f, g);
      for (Elem y : f.elements()) {
        Mat4 const z = gen_s(f, f.zero(), y);
        CHECK(mat_mul(f, z, g) == mat_mul(f, g, z));
      }
      for (Elem c : f.elements())
        for (Elem d : f.elements()) {
          Mat4 const h = gen_s(f, c, d);
          Mat4 const comm = mat_mul(f, mat_mul(f, gi, mat_inverse(f, h)), mat_mul(f, g, h));
          REQUIRE(q0.count(key(comm)));
          commutators.insert(key(comm));
        }
    }
  // Q0 is elementary abelian; the commutators must span all of it.
  std::set<std::vector<std::uint64_t>> span{key(Mat4::identity())};
  for (bool grew = true; grew;) {
    grew = false;
    auto const snapshot = span;
    for (auto const &a : snapshot)
      for (auto const &c : commutators) {
        Mat4 ma, mc;
        for (std::size_t i = 0; i < 16; ++i) {
          ma.rows[i / 4][i % 4] = Elem{a[i]};
          mc.rows[i / 4][i % 4] = Elem{c[i]};
        }
        grew |= span.insert(key(mat_mul(f, ma, mc))).second;
      }
  }
  CHECK(span == q0);
}

TEST_CASE("point_p")
{
  Field const f(3);
  CHECK(point_p(f, f.zero(), f.zero()).coords() == vec(0, 0, 0, 1));
  CHECK(point_p(f, f.one(), f.zero()).coords() == vec(1, 0, 1, 1));
  for (Elem b : f.elements())
    CHECK(point_p(f, f.zero(), b) ==
          ProjPoint::from_vector(f, Vec4{f.theta(b), b, f.zero(), f.one()}));
  CHECK(act(f, point_p(f, f.zero(), f.zero()), gen_tau()) == infinity_point(f));
}

TEST_CASE("ovoid construction")
{
  Ovoid const o8(Field(3));
  CHECK(o8.size() == 65u);
  CHECK(Ovoid(Field(5)).size() == 1025u);
  CHECK(o8.index_of(point_p(o8.field(), Elem{0}, Elem{0})) == 1u);
  CHECK(o8.index_of(infinity_point(o8.field())) == 0u);
  CHECK_FALSE(o8.index_of(ProjPoint::from_vector(o8.field(), vec(0, 1, 0, 0))).has_value());
  for (Index i = 0u; i < o8.size(); ++i) {
    CHECK(o8.index_of(o8.point(i)) == i);
    CHECK(o8.index_of(o8.proj(i)) == i);
  }
}

TEST_CASE("act_fast examples")
{
  Field const f(3);
  Ovoid const o(f);
  for (Elem b : f.elements())
    CHECK(o.act_fast(Affine{f.zero(), f.zero()}, SGen{f.zero(), b}) ==
          OvoidPoint{Affine{f.zero(), b}});
  for (Elem a : f.elements()) {
    if (a.bits == 0u)
      continue;
    for (Elem b : f.elements()) {
      OvoidPoint p = o.act_fast(Affine{f.one(), f.zero()}, MGen{a});
      p = o.act_fast(p, SGen{f.zero(), b});
      CHECK(p == OvoidPoint{Affine{a, b}});
    }
  }
  for (Elem x : f.elements())
    for (Elem y : f.elements())
      CHECK(o.act_fast(Infinity{}, SGen{x, y}) == OvoidPoint{Infinity{}});
  CHECK(o.act_fast(Infinity{}, TauGen{}) == OvoidPoint{Affine{f.zero(), f.zero()}});
}

TEST_CASE("symbolic action equals matrix action")
{
  Field const f(3);
  Ovoid const o(f);
  std::vector<Generator> gens;
  for (Elem x : f.elements())
    for (Elem y : f.elements())
      gens.emplace_back(SGen{x, y});
  for (Elem k : f.elements())
    if (k.bits)
      gens.emplace_back(MGen{k});
  gens.emplace_back(TauGen{});
  for (Generator const &g : gens) {
    Mat4 const m = to_matrix(f, g);
    for (Index i = 0u; i < o.size(); ++i)
      REQUIRE(o.act_fast(i, g) == o.act_matrix(i, m));
  }

  Field const f32(5);
  Ovoid const o32(f32);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> elem(0u, 31u);
  std::uniform_int_distribution<Index> point(0u, 1024u);
  for (int t = 0; t < 10000; ++t) {
    Generator g;
    switch (t % 3) {
      case 0: g = SGen{Elem{elem(rng)}, Elem{elem(rng)}}; break;
      case 1: g = MGen{Elem{1u + elem(rng) % 31u}}; break;
      default: g = TauGen{}; break;
    }
    Index const i = point(rng);
    REQUIRE(o32.act_fast(i, g) == o32.act_matrix(i, to_matrix(f32, g)));
  }
}

TEST_CASE("foreign matrices are detected")
{
  Field const f(3);
  Ovoid const o(f);
  Mat4 swap12;
  for (auto [i, j] : {std::pair{1u, 2u}, {2u, 1u}, {3u, 3u}, {4u, 4u}})
    swap12.at(i, j) = f.one();
  bool thrown = false;
  for (Index i = 0u; i < o.size() && !thrown; ++i) {
    try {
      o.act_matrix(i, swap12);
    } catch (VerificationError const &) {
      thrown = true;
    }
  }
  CHECK(thrown);
}

TEST_CASE("Frobenius structure, q = 8")
{
  Field const f(3);
  Ovoid const o(f);

  // M is semiregular off {inf, omega}.
  for (Elem k : f.elements()) {
    if (k.bits <= 1u)
      continue;
    for (Index i = 2u; i < o.size(); ++i)
      CHECK(o.act_fast(i, MGen{k}) != i);
  }
  // Q is regular on the affine points.
  std::set<Index> orbit;
  for (Elem x : f.elements())
    for (Elem y : f.elements()) {
      orbit.insert(o.act_fast(Ovoid::omega(), SGen{x, y}));
      if (x.bits || y.bits)
        for (Index i = 1u; i < o.size(); ++i)
          CHECK(o.act_fast(i, SGen{x, y}) != i);
    }
  CHECK(orbit.size() == 64u);
  CHECK(orbit.count(Ovoid::infinity()) == 0u);
}

TEST_CASE("subgroup enumeration")
{
  Field const f(3);
  auto count = [&](Subgroup s) {
    std::set<std::vector<std::uint64_t>> seen;
    for (Mat4 const &m : enumerate_subgroup(f, s))
      seen.insert(key(m));
    return seen.size();
  };
  CHECK(count(Subgroup::K) == 56u);
  CHECK(count(Subgroup::H) == 448u);
  CHECK(count(Subgroup::Q0) == 8u);
  CHECK(count(Subgroup::Q) == 64u);
  CHECK(count(Subgroup::M) == 7u);
  CHECK(enumerate_subgroup(f, Subgroup::K).size() == 56u);
  CHECK(suzuki_order(8) == 29120u);

  // K = Q0 M is closed under multiplication.
  auto const k = enumerate_subgroup(f, Subgroup::K);
  std::set<std::vector<std::uint64_t>> kset;
  for (Mat4 const &m : k)
    kset.insert(key(m));
  for (Mat4 const &a : k)
    for (Mat4 const &b : k)
      REQUIRE(kset.count(key(mat_mul(f, a, b))));
}

TEST_CASE("K-orbits")
{
  for (unsigned m : {3u, 5u}) {
    Ovoid const o{Field(m)};
    std::uint64_t const q = o.q();
    KOrbits const orb = k_orbits(o);
    CHECK(orb.delta1.size() == 1u);
    CHECK(orb.delta2.size() == q);
    CHECK(orb.delta3.size() == q * (q - 1u));
    for (Elem b : o.field().elements())
      CHECK(std::binary_search(orb.delta2.begin(), orb.delta2.end(),
                               *o.index_of(point_p(o.field(), Elem{0}, b))));
  }
}
