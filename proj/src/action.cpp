#include "stod/action.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace stod
{

namespace
{

std::uint64_t hash_span(std::span<Index const> xs)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Index x : xs) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 29u);
}

// Exact interning of blocks: ids index into an owned vector, the hash set
// stores ids only.
class BlockTable
{
public:
  BlockTable() : _ids(0, Hash{this}, Eq{this}) {}
  BlockTable(BlockTable const &) = delete;
  BlockTable &operator=(BlockTable const &) = delete;

  /// Returns (id, inserted).
  std::pair<std::size_t, bool> intern(Block const &b)
  {
    _blocks.push_back(b);
    auto [it, fresh] = _ids.insert(_blocks.size() - 1u);
    if (!fresh)
      _blocks.pop_back();
    return {*it, fresh};
  }

  Block const &operator[](std::size_t id) const { return _blocks[id]; }
  std::size_t size() const { return _blocks.size(); }
  std::vector<Block> release() { _ids.clear(); return std::move(_blocks); }

private:
  struct Hash
  {
    BlockTable const *t;
    std::size_t operator()(std::size_t id) const { return hash_span(t->_blocks[id]); }
  };
  struct Eq
  {
    BlockTable const *t;
    bool operator()(std::size_t a, std::size_t b) const
    {
      return t->_blocks[a] == t->_blocks[b];
    }
  };

  std::vector<Block> _blocks;
  std::unordered_set<std::size_t, Hash, Eq> _ids;
};

std::size_t num_points(GeneratorSet const &gens)
{
  if (gens.perms.empty())
    throw std::invalid_argument("empty generator set");
  return gens.perms.front().size();
}

} // namespace

Perm::Perm(std::vector<Index> images) : _images(std::move(images))
{
  std::vector<bool> hit(_images.size(), false);
  for (Index i : _images) {
    if (i >= _images.size() || hit[i])
      throw std::invalid_argument("images do not form a permutation");
    hit[i] = true;
  }
}

Perm Perm::identity(std::size_t n)
{
  std::vector<Index> img(n);
  for (std::size_t i = 0u; i < n; ++i)
    img[i] = static_cast<Index>(i);
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::then(Perm const &h) const
{
  if (h.size() != size())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<Index> img(size());
  for (std::size_t i = 0u; i < size(); ++i)
    img[i] = h._images[_images[i]];
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::inverse() const
{
  std::vector<Index> img(size());
  for (std::size_t i = 0u; i < size(); ++i)
    img[_images[i]] = static_cast<Index>(i);
  return Perm(std::move(img), Unchecked{});
}

bool Perm::is_identity() const
{
  return fixed_points() == size();
}

std::size_t Perm::fixed_points() const
{
  std::size_t n = 0u;
  for (std::size_t i = 0u; i < size(); ++i)
    if (_images[i] == i)
      ++n;
  return n;
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  return static_cast<std::size_t>(hash_span(p.images()));
}

Perm to_perm(Ovoid const &ovoid, Mat4 const &g)
{
  std::vector<Index> img(ovoid.size());
  for (Index i = 0u; i < ovoid.size(); ++i)
    img[i] = ovoid.act_matrix(i, g);
  return Perm(std::move(img));
}

Perm to_perm(Ovoid const &ovoid, Generator const &g)
{
  if (std::holds_alternative<TauGen>(g))
    return to_perm(ovoid, gen_tau());
  std::vector<Index> img(ovoid.size());
  for (Index i = 0u; i < ovoid.size(); ++i)
    img[i] = ovoid.act_fast(i, g);
  return Perm(std::move(img));
}

GeneratorSet GeneratorSet::from(Ovoid const &ovoid, std::vector<Generator> gens)
{
  GeneratorSet res;
  res.perms.reserve(gens.size());
  for (Generator const &g : gens)
    res.perms.push_back(to_perm(ovoid, g));
  res.labels = std::move(gens);
  return res;
}

GeneratorSet GeneratorSet::standard(Ovoid const &ovoid)
{
  Field const &f = ovoid.field();
  std::vector<Generator> gens;
  for (Elem x : f.elements())
    for (Elem y : f.elements())
      gens.emplace_back(SGen{x, y});
  gens.emplace_back(MGen{f.primitive_element()});
  gens.emplace_back(TauGen{});
  return from(ovoid, std::move(gens));
}

GeneratorSet GeneratorSet::compact(Ovoid const &ovoid)
{
  Field const &f = ovoid.field();
  std::vector<Generator> gens;
  for (unsigned i = 0u; i < f.degree(); ++i)
    gens.emplace_back(SGen{Elem{std::uint64_t{1} << i}, f.zero()});
  for (unsigned i = 0u; i < f.degree(); ++i)
    gens.emplace_back(SGen{f.zero(), Elem{std::uint64_t{1} << i}});
  gens.emplace_back(MGen{f.primitive_element()});
  gens.emplace_back(TauGen{});
  return from(ovoid, std::move(gens));
}

GeneratorSet GeneratorSet::k_generators(Ovoid const &ovoid)
{
  Field const &f = ovoid.field();
  std::vector<Generator> gens;
  for (Elem y : f.elements())
    gens.emplace_back(SGen{f.zero(), y});
  for (Elem k : f.elements())
    if (k.bits != 0u)
      gens.emplace_back(MGen{k});
  return from(ovoid, std::move(gens));
}

GeneratorSet GeneratorSet::identity_only(std::size_t v)
{
  GeneratorSet res;
  res.perms.push_back(Perm::identity(v));
  res.labels.emplace_back(SGen{});
  return res;
}

void set_image(Block const &set, Perm const &g, Block &out,
               std::vector<std::uint64_t> &scratch)
{
  out.clear();
  for (Index i : set) {
    Index const j = g[i];
    scratch[j >> 6u] |= std::uint64_t{1} << (j & 63u);
  }
  for (std::size_t w = 0u; w < scratch.size() && out.size() < set.size(); ++w) {
    std::uint64_t bits = scratch[w];
    while (bits != 0u) {
      out.push_back(static_cast<Index>(w * 64u + static_cast<unsigned>(std::countr_zero(bits))));
      bits &= bits - 1u;
    }
    scratch[w] = 0u;
  }
}

std::vector<Index> point_orbit(Index start, GeneratorSet const &gens)
{
  std::size_t const v = num_points(gens);
  std::vector<bool> seen(v, false);
  std::vector<Index> orbit{start};
  seen.at(start) = true;
  for (std::size_t head = 0u; head < orbit.size(); ++head) {
    Index const i = orbit[head];
    for (Perm const &g : gens.perms) {
      Index const j = g[i];
      if (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<Block> set_orbit(Block base, GeneratorSet const &gens)
{
  std::size_t const v = num_points(gens);
  if (base.empty())
    throw std::invalid_argument("set_orbit needs a nonempty base set");
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  BlockTable table;
  table.intern(base);
  std::vector<std::uint64_t> scratch(v / 64u + 1u, 0u);
  Block img;
  img.reserve(base.size());
  for (std::size_t head = 0u; head < table.size(); ++head) {
    for (Perm const &g : gens.perms) {
      // table[head] may move on insertion; image first, then intern.
      set_image(table[head], g, img, scratch);
      table.intern(img);
    }
  }
  return table.release();
}

std::uint64_t ordered_pair_orbit(Index a, Index b, GeneratorSet const &gens)
{
  if (a == b)
    throw std::invalid_argument("ordered pair needs distinct points");
  std::uint64_t const v = num_points(gens);
  std::vector<bool> seen(v * v, false);
  std::vector<std::uint64_t> queue{a * v + b};
  seen[a * v + b] = true;
  for (std::size_t head = 0u; head < queue.size(); ++head) {
    auto const x = static_cast<Index>(queue[head] / v);
    auto const y = static_cast<Index>(queue[head] % v);
    for (Perm const &g : gens.perms) {
      std::uint64_t const id = g[x] * v + g[y];
      if (!seen[id]) {
        seen[id] = true;
        queue.push_back(id);
      }
    }
  }
  return queue.size();
}

std::uint64_t flag_orbit(Index point, Block block, GeneratorSet const &gens)
{
  std::size_t const v = num_points(gens);
  std::sort(block.begin(), block.end());
  if (!std::binary_search(block.begin(), block.end(), point))
    throw std::invalid_argument("flag point is not in the block");

  BlockTable table;
  auto const flag_id = [v](std::size_t block_id, Index p) {
    return static_cast<std::uint64_t>(block_id) * v + p;
  };

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  auto const root = table.intern(block).first;
  queue.push_back(flag_id(root, point));
  seen.insert(queue.back());

  std::vector<std::uint64_t> scratch(v / 64u + 1u, 0u);
  Block img;
  for (std::size_t head = 0u; head < queue.size(); ++head) {
    std::size_t const bid = queue[head] / v;
    auto const p = static_cast<Index>(queue[head] % v);
    for (Perm const &g : gens.perms) {
      set_image(table[bid], g, img, scratch);
      auto const id = flag_id(table.intern(img).first, g[p]);
      if (seen.insert(id).second)
        queue.push_back(id);
    }
  }
  return queue.size();
}

std::uint64_t stabilizer_order(std::uint64_t orbit_size, std::uint64_t group_order)
{
  if (orbit_size == 0u || group_order % orbit_size != 0u)
    throw std::invalid_argument("orbit size " + std::to_string(orbit_size) +
                                " does not divide group order " +
                                std::to_string(group_order));
  return group_order / orbit_size;
}

std::vector<Perm> closure(GeneratorSet const &gens, std::size_t budget)
{
  std::size_t const v = num_points(gens);
  std::vector<Perm> elems{Perm::identity(v)};
  std::unordered_set<Perm, PermHash> seen{elems.front()};
  for (std::size_t head = 0u; head < elems.size(); ++head) {
    for (Perm const &g : gens.perms) {
      Perm h = elems[head].then(g);
      if (seen.insert(h).second) {
        if (elems.size() >= budget)
          throw std::length_error("group too large for enumeration");
        elems.push_back(std::move(h));
      }
    }
  }
  return elems;
}

std::vector<Perm> setwise_stabilizer(Block const &set, std::span<Perm const> elements)
{
  std::vector<bool> member;
  for (Index i : set) {
    if (i >= member.size())
      member.resize(i + 1u, false);
    member[i] = true;
  }

  std::vector<Perm> res;
  for (Perm const &g : elements) {
    bool keeps = true;
    for (Index i : set) {
      Index const j = g[i];
      if (j >= member.size() || !member[j]) {
        keeps = false;
        break;
      }
    }
    if (keeps)
      res.push_back(g);
  }
  return res;
}

} // namespace stod
