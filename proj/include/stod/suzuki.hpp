#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "stod/gf2m.hpp"
#include "stod/pg3.hpp"

namespace stod
{

/// Index of a point of the ovoid: 0 is infinity, then the affine points
/// p(alpha, beta) in (alpha, beta) bit order.
using Index = std::uint32_t;

struct Infinity
{
  bool operator==(Infinity const &) const = default;
};

struct Affine
{
  Elem alpha;
  Elem beta;
  bool operator==(Affine const &) const = default;
};

using OvoidPoint = std::variant<Infinity, Affine>;

struct SGen
{
  Elem x;
  Elem y;
};

struct MGen
{
  Elem kappa;
};

struct TauGen
{
};

/// Symbolic descriptor of one of the three generator kinds.
using Generator = std::variant<SGen, MGen, TauGen>;

std::string describe(Generator const &g);

/// s(x,y): lower unitriangular, (2,1)=x, (3,1)=y, (3,2)=x^theta,
/// (4,1)=x^(1+theta)+xy+y^theta, (4,2)=x^(1+theta)+y, (4,3)=x.
Mat4 gen_s(Field const &f, Elem x, Elem y);
/// m(kappa) = diag(k^(1+2^n), k^(2^n), k^(-2^n), k^(-1-2^n)). Throws on 0.
Mat4 gen_m(Field const &f, Elem kappa);
/// tau = e14 + e23 + e32 + e41.
Mat4 gen_tau();
Mat4 to_matrix(Field const &f, Generator const &g);

/// kappa^(1+theta).
Elem one_plus_theta(Field const &f, Elem kappa);

/// p(alpha,beta) = [alpha^(2+theta) + alpha beta + beta^theta, beta, alpha, 1].
ProjPoint point_p(Field const &f, Elem alpha, Elem beta);
ProjPoint infinity_point(Field const &f);

/// The Suzuki-Tits ovoid: q^2+1 points with both symbolic and projective
/// realizations. Immutable after construction.
class Ovoid
{
public:
  /// Throws VerificationError if two points coincide projectively.
  explicit Ovoid(Field field);

  Field const &field() const { return _field; }
  std::uint64_t q() const { return _field.order(); }
  std::size_t size() const { return _points.size(); }

  static constexpr Index infinity() { return 0u; }
  /// omega = p(0,0).
  static constexpr Index omega() { return 1u; }

  OvoidPoint const &point(Index i) const { return _points.at(i); }
  ProjPoint const &proj(Index i) const { return _proj.at(i); }

  Index index_of(OvoidPoint const &p) const;
  std::optional<Index> index_of(ProjPoint const &p) const;

  /// Image under a generator: s and m via the closed formulas, tau via
  /// the matrix action.
  OvoidPoint act_fast(OvoidPoint const &p, Generator const &g) const;
  Index act_fast(Index i, Generator const &g) const;

  /// Image under an arbitrary matrix. Throws VerificationError if the image
  /// leaves the ovoid.
  Index act_matrix(Index i, Mat4 const &g) const;

private:
  Field _field;
  std::vector<OvoidPoint> _points;
  std::vector<ProjPoint> _proj;
  std::unordered_map<ProjPoint, Index, ProjPointHash> _index;
};

enum class Subgroup { Q, Q0, M, H, K };

std::string to_string(Subgroup s);

/// |Q| = q^2, |Q0| = q, |M| = q-1, |H| = q^2(q-1), |K| = q(q-1).
std::uint64_t subgroup_order(std::uint64_t q, Subgroup s);
/// |Sz(q)| = q^2 (q^2+1) (q-1).
std::uint64_t suzuki_order(std::uint64_t q);

/// Q = {s(x,y)}, Q0 = {s(0,y)}, M = {m(k)}, H = {s(x,y) m(k)},
/// K = {s(0,y) m(k)}.
std::vector<Mat4> enumerate_subgroup(Field const &f, Subgroup s);

/// Delta1 = {inf}, Delta2 = {p(0,b)}, Delta3 = {p(a,b) : a != 0}, each sorted.
std::vector<Index> delta(Ovoid const &ovoid, int which);

struct KOrbits
{
  std::vector<Index> delta1;
  std::vector<Index> delta2;
  std::vector<Index> delta3;
};

/// Orbits of K = <s(0,y), m(k)> on the ovoid, computed by closure and
/// checked against delta(). Throws VerificationError on any mismatch.
KOrbits k_orbits(Ovoid const &ovoid);

} // namespace stod
