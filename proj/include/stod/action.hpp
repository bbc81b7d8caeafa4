#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stod/suzuki.hpp"

namespace stod
{

/// Permutation of ovoid indices. images()[i] is the image of point i.
/// Products follow the right action: a.then(b) maps i to b[a[i]].
class Perm
{
public:
  Perm() = default;
  /// Throws std::invalid_argument unless images is a bijection of [0, n).
  explicit Perm(std::vector<Index> images);

  static Perm identity(std::size_t n);

  std::size_t size() const { return _images.size(); }
  Index operator[](Index i) const { return _images[i]; }
  std::vector<Index> const &images() const { return _images; }

  Perm then(Perm const &h) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t fixed_points() const;

  bool operator==(Perm const &) const = default;

private:
  struct Unchecked
  {
  };
  Perm(std::vector<Index> images, Unchecked) : _images(std::move(images)) {}

  std::vector<Index> _images;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

/// Permutation induced on the ovoid by a matrix. Throws VerificationError
/// ("matrix does not preserve the ovoid") if some image leaves it.
Perm to_perm(Ovoid const &ovoid, Mat4 const &g);
/// Same through the symbolic action.
Perm to_perm(Ovoid const &ovoid, Generator const &g);

struct GeneratorSet
{
  std::vector<Perm> perms;
  std::vector<Generator> labels;

  std::size_t size() const { return perms.size(); }

  static GeneratorSet from(Ovoid const &ovoid, std::vector<Generator> gens);
  /// All q^2 s(x,y), m(zeta) for the least primitive zeta, and tau.
  static GeneratorSet standard(Ovoid const &ovoid);
  /// s(b,0) and s(0,b) for each basis vector b, m(zeta), and tau.
  static GeneratorSet compact(Ovoid const &ovoid);
  /// s(0,y) for all y and m(k) for all k != 0.
  static GeneratorSet k_generators(Ovoid const &ovoid);
  static GeneratorSet identity_only(std::size_t v);
};

using Block = std::vector<Index>;

/// Image of a sorted index set, sorted. scratch must hold v bits
/// (v/64 + 1 words) and be zero; it is zero again on return.
void set_image(Block const &set, Perm const &g, Block &out,
               std::vector<std::uint64_t> &scratch);

/// Orbit of a point, ascending.
std::vector<Index> point_orbit(Index start, GeneratorSet const &gens);

/// Orbit of a set under the induced action, in breadth-first discovery
/// order. base need not be sorted; each member is ascending.
std::vector<Block> set_orbit(Block base, GeneratorSet const &gens);

/// Size of the orbit of an ordered pair of distinct points. Throws
/// std::invalid_argument if a == b.
std::uint64_t ordered_pair_orbit(Index a, Index b, GeneratorSet const &gens);

/// Size of the orbit of the flag (point, block), with point in block.
std::uint64_t flag_orbit(Index point, Block block, GeneratorSet const &gens);

/// group_order / orbit_size; throws std::invalid_argument unless exact.
std::uint64_t stabilizer_order(std::uint64_t orbit_size, std::uint64_t group_order);

/// Breadth-first closure of the generators under composition. Throws
/// std::length_error("group too large for enumeration") past budget.
std::vector<Perm> closure(GeneratorSet const &gens, std::size_t budget = std::size_t{1} << 16);

/// The elements that map set onto itself.
std::vector<Perm> setwise_stabilizer(Block const &set, std::span<Perm const> elements);

} // namespace stod
