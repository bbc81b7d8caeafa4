#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stod/action.hpp"
#include "stod/report.hpp"
#include "stod/suzuki.hpp"

namespace stod
{

struct DesignParams
{
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t b = 0;
  std::uint64_t r = 0;

  bool operator==(DesignParams const &) const = default;
};

/// Point set [0, v) of an ovoid and a block list. Blocks are ascending and
/// the list is in lexicographic order.
struct Design
{
  std::uint64_t q = 0;
  int family = 0;
  DesignParams params;
  std::vector<Block> blocks;
};

/// (q^2+1, q, q-1) with b = q(q^2+1), r = q^2 for family 2;
/// (q^2+1, q(q-1), (q-1)(q^2-q-1)) with r = q^2(q-1) for family 3.
DesignParams expected_params(std::uint64_t q, int family);

/// Derives r = bk/v and lambda = bk(k-1)/(v(v-1)); throws VerificationError
/// if either division is inexact.
DesignParams derive_params(std::uint64_t v, std::uint64_t k, std::uint64_t b);

/// Blocks = orbit of Delta_family under gens. family must be 2 or 3.
Design build_design(Ovoid const &ovoid, GeneratorSet const &gens, int family);

/// Pair-incidence counts, upper triangle (i < j) in row-major order. Blocks
/// are sharded across `workers` threads with private tallies.
std::vector<std::uint32_t> pair_tally(Design const &d, unsigned workers = 1);

/// Every pair in exactly lambda blocks, every point in exactly r blocks,
/// blocks of size k and pairwise distinct.
Report verify_2design(Design const &d, unsigned workers = 1);

struct ClaimOptions
{
  /// Breadth-first search over all b*k flags (route a).
  bool flag_orbit_bfs = false;
  /// Ordered-pair orbit of (inf, omega); v(v-1) states.
  bool pair_orbit = true;
  /// |G| from a full enumeration, if one was made.
  std::optional<std::uint64_t> group_order;
};

/// Block transitivity, flag transitivity, non-symmetry, gcd(r, lambda),
/// the chain K < H < G and double transitivity on points.
Report verify_claims(Design const &d, Ovoid const &ovoid, GeneratorSet const &gens,
                     ClaimOptions const &opt = {});

/// Non-collinearity of ovoid triples: all of them, or `samples` uniformly
/// random distinct triples.
Report verify_ovoid_geometry(Ovoid const &ovoid,
                             std::optional<std::uint64_t> samples = std::nullopt,
                             std::uint64_t seed = 1);

} // namespace stod
