#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "stod/gf2m.hpp"

namespace stod
{

using Vec4 = std::array<Elem, 4>;

/// 4x4 matrix over GF(q). at(i, j) uses 1-based indices so entries read
/// like the unit matrices e_ij.
struct Mat4
{
  std::array<Vec4, 4> rows{};

  Elem &at(unsigned i, unsigned j) { return rows[i - 1u][j - 1u]; }
  Elem at(unsigned i, unsigned j) const { return rows[i - 1u][j - 1u]; }

  bool operator==(Mat4 const &) const = default;

  static Mat4 identity();
  /// The unit matrix e_ij.
  static Mat4 unit(unsigned i, unsigned j);
};

/// Point of PG(3,q) in canonical form: the first nonzero coordinate is 1.
class ProjPoint
{
public:
  /// Normalizes w. Throws std::invalid_argument on the zero vector.
  static ProjPoint from_vector(Field const &f, Vec4 const &w);

  Vec4 const &coords() const { return _coords; }
  Elem operator[](std::size_t i) const { return _coords[i]; }

  bool operator==(ProjPoint const &) const = default;
  auto operator<=>(ProjPoint const &) const = default;

private:
  explicit ProjPoint(Vec4 const &w) : _coords(w) {}
  Vec4 _coords;
};

/// Scales w so that its first nonzero coordinate is 1. Zero stays zero.
Vec4 normalize(Field const &f, Vec4 const &w);

Mat4 mat_add(Field const &f, Mat4 const &a, Mat4 const &b);
Mat4 mat_scale(Field const &f, Elem c, Mat4 const &a);
Mat4 mat_mul(Field const &f, Mat4 const &a, Mat4 const &b);
/// Throws std::domain_error if a is singular.
Mat4 mat_inverse(Field const &f, Mat4 const &a);

/// Row vector times matrix.
Vec4 vec_mul(Field const &f, Vec4 const &w, Mat4 const &g);

/// [w]^g = [w g]; a right action.
ProjPoint act(Field const &f, ProjPoint const &p, Mat4 const &g);

/// Row rank of 1 to 4 row vectors by Gaussian elimination.
unsigned rank(Field const &f, std::span<Vec4 const> rows);
unsigned rank(Field const &f, Mat4 const &a);

/// True iff the three points lie on a common line. Throws
/// std::invalid_argument("points must be pairwise distinct") otherwise.
bool collinear(Field const &f, ProjPoint const &a, ProjPoint const &b,
               ProjPoint const &c);

struct ProjPointHash
{
  std::size_t operator()(ProjPoint const &p) const noexcept
  {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Elem e : p.coords()) {
      h ^= e.bits;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace stod
