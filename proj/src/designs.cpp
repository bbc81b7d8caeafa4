#include "stod/designs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

#include "stod/errors.hpp"

namespace stod
{

namespace
{

std::string str(std::uint64_t x)
{
  return std::to_string(x);
}

// Pair (i, j), i < j, sits at off[i] + (j - i - 1) in the upper triangle.
std::vector<std::uint64_t> row_offsets(std::uint64_t v)
{
  std::vector<std::uint64_t> off(v);
  std::uint64_t pos = 0u;
  for (std::uint64_t i = 0u; i < v; ++i) {
    off[i] = pos;
    pos += v - i - 1u;
  }
  return off;
}

void tally_range(Design const &d, std::size_t first, std::size_t last,
                 std::vector<std::uint64_t> const &off, std::vector<std::uint32_t> &out)
{
  for (std::size_t bi = first; bi < last; ++bi) {
    Block const &blk = d.blocks[bi];
    for (std::size_t a = 0u; a < blk.size(); ++a) {
      // Wraps for blk[a] == 0; the sum with blk[c] > blk[a] does not.
      std::uint64_t const base = off[blk[a]] - blk[a] - 1u;
      for (std::size_t c = a + 1u; c < blk.size(); ++c)
        ++out[base + blk[c]];
    }
  }
}

} // namespace

DesignParams expected_params(std::uint64_t q, int family)
{
  std::uint64_t const v = q * q + 1u;
  std::uint64_t const b = q * v;
  switch (family) {
    case 2: return {v, q, q - 1u, b, q * q};
    case 3: return {v, q * (q - 1u), (q - 1u) * (q * q - q - 1u), b, q * q * (q - 1u)};
    default: throw std::invalid_argument("family must be 2 or 3");
  }
}

DesignParams derive_params(std::uint64_t v, std::uint64_t k, std::uint64_t b)
{
  if (v < 2u)
    throw VerificationError("a 2-design needs at least two points");
  if ((b * k) % v != 0u)
    throw VerificationError("replication number bk/v = " + str(b * k) + "/" + str(v) +
                            " is not an integer");
  std::uint64_t const num = b * k * (k - 1u);
  std::uint64_t const den = v * (v - 1u);
  if (num % den != 0u)
    throw VerificationError("lambda = bk(k-1)/(v(v-1)) = " + str(num) + "/" + str(den) +
                            " is not an integer");
  return {v, k, num / den, b, b * k / v};
}

Design build_design(Ovoid const &ovoid, GeneratorSet const &gens, int family)
{
  if (family != 2 && family != 3)
    throw std::invalid_argument("family must be 2 or 3");

  Design d;
  d.q = ovoid.q();
  d.family = family;
  d.blocks = set_orbit(delta(ovoid, family), gens);
  std::sort(d.blocks.begin(), d.blocks.end());
  d.params = derive_params(ovoid.size(), d.blocks.front().size(), d.blocks.size());
  return d;
}

std::vector<std::uint32_t> pair_tally(Design const &d, unsigned workers)
{
  std::uint64_t const v = d.params.v;
  auto const off = row_offsets(v);
  std::size_t const pairs = v * (v - 1u) / 2u;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(d.blocks.size())));

  if (workers == 1u) {
    std::vector<std::uint32_t> tally(pairs, 0u);
    tally_range(d, 0u, d.blocks.size(), off, tally);
    return tally;
  }

  std::vector<std::vector<std::uint32_t>> shards(workers, std::vector<std::uint32_t>(pairs, 0u));
  std::vector<std::thread> threads;
  std::size_t const per = (d.blocks.size() + workers - 1u) / workers;
  for (unsigned w = 0u; w < workers; ++w) {
    std::size_t const first = std::min(d.blocks.size(), w * per);
    std::size_t const last = std::min(d.blocks.size(), first + per);
    threads.emplace_back([&, w, first, last] { tally_range(d, first, last, off, shards[w]); });
  }
  for (auto &t : threads)
    t.join();

  for (unsigned w = 1u; w < workers; ++w)
    for (std::size_t i = 0u; i < pairs; ++i)
      shards[0][i] += shards[w][i];
  return std::move(shards[0]);
}

Report verify_2design(Design const &d, unsigned workers)
{
  Report rep;
  DesignParams const &p = d.params;
  std::string const tag = "family " + std::to_string(d.family) + " ";

  bool shape_ok = d.blocks.size() == p.b;
  std::string shape_detail = str(d.blocks.size()) + " blocks of size " + str(p.k);
  for (std::size_t bi = 0u; bi < d.blocks.size() && shape_ok; ++bi) {
    Block const &blk = d.blocks[bi];
    bool const sorted = std::adjacent_find(blk.begin(), blk.end(),
                                           std::greater_equal<>{}) == blk.end();
    if (blk.size() != p.k || !sorted || (!blk.empty() && blk.back() >= p.v)) {
      shape_ok = false;
      shape_detail = "block " + str(bi) + " is not an ascending " + str(p.k) +
                     "-subset of [0," + str(p.v) + ")";
    }
  }
  if (shape_ok) {
    std::vector<Block const *> order;
    for (auto const &blk : d.blocks)
      order.push_back(&blk);
    std::sort(order.begin(), order.end(), [](auto *a, auto *b) { return *a < *b; });
    for (std::size_t i = 1u; i < order.size(); ++i) {
      if (*order[i - 1u] == *order[i]) {
        shape_ok = false;
        shape_detail = "repeated block";
        break;
      }
    }
  }
  rep.add(tag + "block shape", shape_ok, shape_detail);

  bool params_ok = true;
  std::string params_detail = "bk = vr, lambda v(v-1) = bk(k-1)";
  if (p.b * p.k != p.v * p.r || p.lambda * p.v * (p.v - 1u) != p.b * p.k * (p.k - 1u)) {
    params_ok = false;
    params_detail = "double-count identities fail";
  }
  rep.add(tag + "parameter identities", params_ok, params_detail);

  if (!shape_ok) {
    rep.add(tag + "pair tally", false, "skipped: malformed blocks");
    return rep;
  }

  auto const tally = pair_tally(d, workers);
  std::uint64_t const v = p.v;
  std::uint64_t sum = 0u;
  std::uint32_t lo = UINT32_MAX;
  std::uint32_t hi = 0u;
  std::string first_bad;
  std::size_t pos = 0u;
  for (std::uint64_t i = 0u; i < v; ++i) {
    for (std::uint64_t j = i + 1u; j < v; ++j, ++pos) {
      std::uint32_t const c = tally[pos];
      sum += c;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      if (c != p.lambda && first_bad.empty())
        first_bad = "pair (" + str(i) + "," + str(j) + ") lies in " + str(c) +
                    " blocks, expected " + str(p.lambda);
    }
  }
  std::uint64_t const pairs = v * (v - 1u) / 2u;
  rep.add(tag + "pair tally", first_bad.empty(),
          first_bad.empty() ? "all " + str(pairs) + " pairs lie in exactly " +
                                str(p.lambda) + " blocks"
                            : first_bad);
  bool const lambda_ok = sum % pairs == 0u && sum / pairs == p.lambda && lo == hi;
  rep.add(tag + "tallied lambda", lambda_ok,
          "tally/pairs = " + str(sum) + "/" + str(pairs) + ", closed form " + str(p.lambda));

  std::vector<std::uint64_t> through(v, 0u);
  for (auto const &blk : d.blocks)
    for (Index i : blk)
      ++through[i];
  std::string bad_point;
  for (std::uint64_t i = 0u; i < v && bad_point.empty(); ++i)
    if (through[i] != p.r)
      bad_point = "point " + str(i) + " lies in " + str(through[i]) + " blocks, expected " +
                  str(p.r);
  rep.add(tag + "replication", bad_point.empty(),
          bad_point.empty() ? "every point lies in " + str(p.r) + " blocks" : bad_point);
  return rep;
}

Report verify_claims(Design const &d, Ovoid const &ovoid, GeneratorSet const &gens,
                     ClaimOptions const &opt)
{
  Report rep;
  DesignParams const &p = d.params;
  std::uint64_t const q = ovoid.q();
  std::string const tag = "family " + std::to_string(d.family) + " ";

  // (i) The block list is invariant under every generator; together with
  // its construction as a single orbit this is block-transitivity.
  {
    std::unordered_set<std::string> blocks;
    auto const key = [](Block const &b) {
      return std::string(reinterpret_cast<char const *>(b.data()), b.size() * sizeof(Index));
    };
    for (auto const &b : d.blocks)
      blocks.insert(key(b));
    std::vector<std::uint64_t> scratch(ovoid.size() / 64u + 1u, 0u);
    Block img;
    bool invariant = true;
    for (std::size_t bi = 0u; bi < d.blocks.size() && invariant; ++bi) {
      for (Perm const &g : gens.perms) {
        set_image(d.blocks[bi], g, img, scratch);
        if (!blocks.count(key(img))) {
          invariant = false;
          break;
        }
      }
    }
    rep.add(tag + "block-transitive", invariant && d.blocks.size() == p.b,
            "single orbit of " + str(d.blocks.size()) + " blocks, closed under " +
              str(gens.size()) + " generators");
  }

  // (ii) Flag-transitivity. Route b: the base block is a block, K fixes it
  // setwise and is transitive on it.
  Block const base = delta(ovoid, d.family);
  {
    GeneratorSet const kg = GeneratorSet::k_generators(ovoid);
    bool const present = std::binary_search(d.blocks.begin(), d.blocks.end(), base);
    bool const fixes = set_orbit(base, kg).size() == 1u;
    bool const transitive = point_orbit(base.front(), kg) == base;
    rep.add(tag + "flag-transitive (K on Delta)", present && fixes && transitive,
            std::string("Delta") + std::to_string(d.family) +
              (present ? " is a block" : " missing") +
              (fixes ? ", K-invariant" : ", not K-invariant") +
              (transitive ? ", K-transitive" : ", not K-transitive"));
  }
  if (opt.flag_orbit_bfs) {
    std::uint64_t const flags = flag_orbit(base.front(), base, gens);
    rep.add(tag + "flag orbit", flags == p.b * p.k,
            "orbit of one flag has " + str(flags) + " elements, bk = " + str(p.b * p.k));
  }

  // (iii)
  rep.add(tag + "non-symmetric", p.b != p.v, "b = " + str(p.b) + ", v = " + str(p.v));

  // (iv)
  std::uint64_t const g = std::gcd(p.r, p.lambda);
  if (d.family == 2)
    rep.add(tag + "gcd(r,lambda)", g == 1u, "gcd(" + str(p.r) + "," + str(p.lambda) + ") = " + str(g));
  else
    rep.info(tag + "gcd(r,lambda)", "gcd(" + str(p.r) + "," + str(p.lambda) + ") = " + str(g));

  // (v) K < H < G, with |G| from enumeration if available, otherwise from
  // the point orbit times |H|.
  {
    std::uint64_t const k_order = subgroup_order(q, Subgroup::K);
    std::uint64_t const h_order = subgroup_order(q, Subgroup::H);
    std::uint64_t const v = point_orbit(Ovoid::infinity(), gens).size();
    std::uint64_t const g_order = opt.group_order.value_or(v * h_order);
    bool ok = k_order < h_order && h_order < g_order && h_order % k_order == 0u &&
              g_order % h_order == 0u;
    std::uint64_t block_stab = 0u;
    try {
      block_stab = stabilizer_order(p.b, g_order);
    } catch (std::invalid_argument const &) {
      ok = false;
    }
    ok = ok && block_stab == k_order;
    rep.add(tag + "subgroup chain K < H < G", ok,
            "|K| = " + str(k_order) + ", |H| = " + str(h_order) + ", |G| = " + str(g_order) +
              (opt.group_order ? " (enumerated)" : " (|orbit of inf| * |H|)") +
              ", |G|/b = " + str(block_stab));
  }

  // (vi)
  if (opt.pair_orbit) {
    std::uint64_t const n = ordered_pair_orbit(Ovoid::infinity(), Ovoid::omega(), gens);
    rep.add(tag + "doubly transitive on points", n == p.v * (p.v - 1u),
            "ordered-pair orbit " + str(n) + ", v(v-1) = " + str(p.v * (p.v - 1u)));
  }
  return rep;
}

Report verify_ovoid_geometry(Ovoid const &ovoid, std::optional<std::uint64_t> samples,
                             std::uint64_t seed)
{
  Report rep;
  Field const &f = ovoid.field();
  auto const v = static_cast<Index>(ovoid.size());
  std::uint64_t checked = 0u;
  std::string bad;

  auto const test = [&](Index a, Index b, Index c) {
    ++checked;
    if (bad.empty() && collinear(f, ovoid.proj(a), ovoid.proj(b), ovoid.proj(c)))
      bad = "points " + str(a) + ", " + str(b) + ", " + str(c) + " are collinear";
  };

  if (!samples) {
    for (Index a = 0u; a < v; ++a)
      for (Index b = a + 1u; b < v; ++b)
        for (Index c = b + 1u; c < v; ++c)
          test(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0u, v - 1u);
    while (checked < *samples) {
      Index const a = pick(rng);
      Index const b = pick(rng);
      Index const c = pick(rng);
      if (a != b && a != c && b != c)
        test(a, b, c);
    }
  }

  rep.add("ovoid no three collinear", bad.empty(),
          bad.empty() ? str(checked) + (samples ? " sampled" : "") + " triples, 0 collinear"
                      : bad);
  return rep;
}

} // namespace stod
