#include "stod/suite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "stod/action.hpp"
#include "stod/designs.hpp"
#include "stod/errors.hpp"
#include "stod/io.hpp"
#include "stod/suzuki.hpp"

namespace stod
{

namespace
{

std::string str(std::uint64_t x)
{
  return std::to_string(x);
}

constexpr std::uint64_t sampled_pairs = 10000u;
constexpr std::uint64_t sampled_triples = 1000000u;

void field_checks(Field const &f, Report &rep)
{
  auto const elems = f.elements();

  bool frob = true;
  for (Elem a : elems)
    frob = frob && f.theta(f.theta(a)) == f.mul(a, a);
  rep.add("theta^2 is the Frobenius", frob, "all " + str(f.order()) + " elements");

  bool aut = true;
  bool tables = true;
  for (Elem a : elems) {
    for (Elem b : elems) {
      aut = aut && f.theta(f.add(a, b)) == f.add(f.theta(a), f.theta(b)) &&
            f.theta(f.mul(a, b)) == f.mul(f.theta(a), f.theta(b));
      tables = tables && f.mul(a, b) == f.mul_schoolbook(a, b);
    }
  }
  rep.add("theta is a field automorphism", aut, "all " + str(f.order() * f.order()) + " pairs");
  if (f.has_tables())
    rep.add("log table agrees with schoolbook product", tables,
            "all " + str(f.order() * f.order()) + " pairs");
}

void generator_checks(Ovoid const &ovoid, std::mt19937_64 &rng, Report &rep)
{
  Field const &f = ovoid.field();
  std::uint64_t const q = f.order();
  bool const exhaustive = q == 8u;
  std::uniform_int_distribution<std::uint64_t> elem(0u, q - 1u);
  std::uniform_int_distribution<std::uint64_t> nonzero(1u, q - 1u);
  std::uniform_int_distribution<Index> point(0u, static_cast<Index>(ovoid.size() - 1u));

  // Symbolic action against the matrix action.
  std::uint64_t n = 0u;
  std::string bad;
  auto const compare = [&](Index i, Generator const &g) {
    ++n;
    if (bad.empty() && ovoid.act_fast(i, g) != ovoid.act_matrix(i, to_matrix(f, g)))
      bad = describe(g) + " on point " + str(i);
  };
  if (exhaustive) {
    std::vector<Generator> gens;
    for (Elem x : f.elements())
      for (Elem y : f.elements())
        gens.emplace_back(SGen{x, y});
    for (Elem k : f.elements())
      if (k.bits)
        gens.emplace_back(MGen{k});
    gens.emplace_back(TauGen{});
    for (Generator const &g : gens)
      for (Index i = 0u; i < ovoid.size(); ++i)
        compare(i, g);
  } else {
    for (std::uint64_t t = 0u; t < sampled_pairs; ++t) {
      Generator g;
      switch (t % 3u) {
        case 0: g = SGen{Elem{elem(rng)}, Elem{elem(rng)}}; break;
        case 1: g = MGen{Elem{nonzero(rng)}}; break;
        default: g = TauGen{}; break;
      }
      compare(point(rng), g);
    }
  }
  rep.add("symbolic action matches matrix action", bad.empty(),
          bad.empty() ? str(n) + (exhaustive ? "" : " sampled") + " (point, generator) pairs"
                      : "mismatch for " + bad);

  // s(x,y) s(z,t) = s(x+z, y+t+x^theta z)
  n = 0u;
  bad.clear();
  auto const s_law = [&](Elem x, Elem y, Elem z, Elem t) {
    ++n;
    Mat4 const lhs = mat_mul(f, gen_s(f, x, y), gen_s(f, z, t));
    Mat4 const rhs = gen_s(f, f.add(x, z), f.add(f.add(y, t), f.mul(f.theta(x), z)));
    if (bad.empty() && lhs != rhs)
      bad = "x=" + str(x.bits) + " y=" + str(y.bits) + " z=" + str(z.bits) + " t=" + str(t.bits);
  };
  if (exhaustive) {
    for (Elem x : f.elements())
      for (Elem y : f.elements())
        for (Elem z : f.elements())
          for (Elem t : f.elements())
            s_law(x, y, z, t);
  } else {
    for (std::uint64_t i = 0u; i < sampled_pairs; ++i)
      s_law(Elem{elem(rng)}, Elem{elem(rng)}, Elem{elem(rng)}, Elem{elem(rng)});
  }
  rep.add("s multiplication law", bad.empty(),
          bad.empty() ? str(n) + (exhaustive ? "" : " sampled") + " products" : "fails at " + bad);

  // m(k)^-1 s(x,y) m(k) = s(xk, y k^(1+theta))
  n = 0u;
  bad.clear();
  auto const m_law = [&](Elem k, Elem x, Elem y) {
    ++n;
    Mat4 const m = gen_m(f, k);
    Mat4 const lhs = mat_mul(f, mat_mul(f, mat_inverse(f, m), gen_s(f, x, y)), m);
    Mat4 const rhs = gen_s(f, f.mul(x, k), f.mul(y, one_plus_theta(f, k)));
    if (bad.empty() && lhs != rhs)
      bad = "k=" + str(k.bits) + " x=" + str(x.bits) + " y=" + str(y.bits);
  };
  if (exhaustive) {
    for (Elem k : f.elements())
      if (k.bits)
        for (Elem x : f.elements())
          for (Elem y : f.elements())
            m_law(k, x, y);
  } else {
    for (std::uint64_t i = 0u; i < sampled_pairs; ++i)
      m_law(Elem{nonzero(rng)}, Elem{elem(rng)}, Elem{elem(rng)});
  }
  rep.add("m conjugation law", bad.empty(),
          bad.empty() ? str(n) + (exhaustive ? "" : " sampled") + " conjugates" : "fails at " + bad);
}

std::uint64_t distinct_count(std::vector<Mat4> const &ms)
{
  std::set<std::vector<std::uint64_t>> seen;
  for (Mat4 const &m : ms) {
    std::vector<std::uint64_t> key;
    for (auto const &row : m.rows)
      for (Elem e : row)
        key.push_back(e.bits);
    seen.insert(std::move(key));
  }
  return seen.size();
}

void subgroup_checks(Ovoid const &ovoid, Report &rep)
{
  Field const &f = ovoid.field();
  std::uint64_t const q = f.order();
  for (Subgroup s : {Subgroup::Q0, Subgroup::M, Subgroup::K, Subgroup::Q, Subgroup::H}) {
    std::uint64_t const want = subgroup_order(q, s);
    if (want > (std::uint64_t{1} << 16u)) {
      rep.info("order of " + to_string(s), "enumeration skipped, " + str(want) + " elements");
      continue;
    }
    std::uint64_t const got = distinct_count(enumerate_subgroup(f, s));
    rep.add("order of " + to_string(s), got == want,
            str(got) + " distinct matrices, expected " + str(want));
  }

  try {
    auto const orbits = k_orbits(ovoid);
    rep.add("K-orbits are Delta1, Delta2, Delta3", true,
            "sizes " + str(orbits.delta1.size()) + ", " + str(orbits.delta2.size()) + ", " +
              str(orbits.delta3.size()));
  } catch (VerificationError const &e) {
    rep.add("K-orbits are Delta1, Delta2, Delta3", false, e.what());
  }
}

void closure_checks(Ovoid const &ovoid, GeneratorSet const &gens, Report &rep,
                    std::uint64_t &group_order)
{
  std::uint64_t const q = ovoid.q();
  auto const elems = closure(GeneratorSet::standard(ovoid));
  group_order = elems.size();
  rep.add("closure order", elems.size() == suzuki_order(q),
          str(elems.size()) + ", q^2(q^2+1)(q-1) = " + str(suzuki_order(q)));

  std::uint64_t const compact = closure(gens).size();
  rep.add("compact generators give the same group", compact == elems.size(),
          str(compact) + " elements from " + str(gens.size()) + " generators");

  std::unordered_set<Perm, PermHash> const members(elems.begin(), elems.end());
  bool inverse_closed = true;
  for (Perm const &g : elems)
    inverse_closed = inverse_closed && members.count(g.inverse());
  rep.add("closure is closed under inverses", inverse_closed, "all " + str(elems.size()));

  std::vector<Perm> k_perms;
  for (Mat4 const &m : enumerate_subgroup(ovoid.field(), Subgroup::K))
    k_perms.push_back(to_perm(ovoid, m));
  std::unordered_set<Perm, PermHash> const k_set(k_perms.begin(), k_perms.end());
  for (int i : {2, 3}) {
    auto const stab = setwise_stabilizer(delta(ovoid, i), elems);
    bool same = stab.size() == k_set.size();
    for (Perm const &g : stab)
      same = same && k_set.count(g);
    rep.add("setwise stabilizer of Delta" + std::to_string(i) + " = K", same,
            str(stab.size()) + " elements");
  }

  std::uint64_t worst = 0u;
  for (Perm const &g : elems)
    if (!g.is_identity())
      worst = std::max<std::uint64_t>(worst, g.fixed_points());
  rep.add("three-point stabilizer is trivial", worst < 3u,
          "nonidentity elements fix at most " + str(worst) + " points");
}

} // namespace

Report run_verification(SuiteOptions const &opt)
{
  Report rep;
  Field const f = Field::of_order(opt.q, opt.poly);
  std::mt19937_64 rng(opt.seed);

  rep.info("field", "GF(" + str(f.order()) + ") mod " + hex_string(f.polynomial()) +
                      ", theta: a -> a^" + str(f.theta_exponent()));
  field_checks(f, rep);

  Ovoid const ovoid(f);
  std::uint64_t const q = ovoid.q();
  std::uint64_t const v = q * q + 1u;
  rep.add("ovoid size", ovoid.size() == v, str(ovoid.size()) + " distinct points");

  bool const exhaustive_triples = q == 8u || opt.exhaustive_triples;
  rep.append(verify_ovoid_geometry(
    ovoid, exhaustive_triples ? std::nullopt : std::optional<std::uint64_t>(sampled_triples),
    opt.seed));

  generator_checks(ovoid, rng, rep);
  subgroup_checks(ovoid, rep);

  GeneratorSet const gens = GeneratorSet::compact(ovoid);
  std::uint64_t const points = point_orbit(Ovoid::infinity(), gens).size();
  rep.add("transitive on points", points == v, "orbit of inf has " + str(points) + " points");
  bool const pair_orbit = q <= 32u;

  std::optional<std::uint64_t> group_order;
  if (q == 8u && opt.full_closure) {
    std::uint64_t n = 0u;
    closure_checks(ovoid, gens, rep, n);
    group_order = n;
  }

  if (q > 32u) {
    std::uint64_t const g = v * subgroup_order(q, Subgroup::H);
    rep.info("designs", "block enumeration skipped at q=" + str(q) + "; b = |G|/|K| = " +
                          str(g / subgroup_order(q, Subgroup::K)));
    return rep;
  }

  for (int family : opt.families) {
    Design const d = build_design(ovoid, gens, family);
    DesignParams const want = expected_params(q, family);
    DesignParams const &p = d.params;
    rep.add("family " + std::to_string(family) + " parameters", p == want,
            "v=" + str(p.v) + " k=" + str(p.k) + " lambda=" + str(p.lambda) + " b=" + str(p.b) +
              " r=" + str(p.r));

    if (family == 3 && q > 8u && !opt.verify_family3_pairs)
      rep.info("family 3 pair tally", "skipped, pass --verify-family3-pairs");
    else
      rep.append(verify_2design(d, opt.workers));

    ClaimOptions co;
    co.flag_orbit_bfs = q == 8u;
    co.pair_orbit = pair_orbit && family == opt.families.front();
    co.group_order = group_order;
    rep.append(verify_claims(d, ovoid, gens, co));
  }
  return rep;
}

} // namespace stod
