#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace stod
{

/// Element of GF(2^m) in polynomial basis: bit i is the coefficient of x^i.
struct Elem
{
  std::uint64_t bits = 0;

  constexpr auto operator<=>(Elem const &) const = default;
};

/// Carry-less product of a and b reduced modulo poly (degree m). Works for
/// any poly with bit m set, irreducible or not.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t poly,
                          unsigned m);

/// Rabin's test: poly has degree m and is irreducible over GF(2).
bool is_irreducible(std::uint64_t poly, unsigned m);

/// Default reduction polynomial for odd degrees 3..13.
std::optional<std::uint64_t> default_polynomial(unsigned m);

/// True iff q = 2^(2n+1) with n >= 1.
bool is_admissible_order(std::uint64_t q);

/**
 * GF(q), q = 2^m with m = 2n+1 >= 3, together with the Tits automorphism
 * theta: a -> a^(2^(n+1)). theta applied twice is the Frobenius a -> a^2.
 *
 * Instances are immutable after construction. For m <= 16 a log/antilog
 * table backs mul(); mul_schoolbook() is always available and the two
 * paths are cross-tested.
 */
class Field
{
public:
  /// Throws std::invalid_argument if m is even, m < 3, m > 31, or poly is
  /// not an irreducible polynomial of degree m.
  explicit Field(unsigned m, std::optional<std::uint64_t> poly = std::nullopt,
                 bool use_tables = true);

  /// Field of order q; q must satisfy is_admissible_order.
  static Field of_order(std::uint64_t q,
                        std::optional<std::uint64_t> poly = std::nullopt);

  unsigned degree() const { return _m; }
  unsigned n() const { return (_m - 1u) / 2u; }
  std::uint64_t order() const { return std::uint64_t{1} << _m; }
  /// r = 2^(n+1), the exponent of theta.
  std::uint64_t theta_exponent() const { return std::uint64_t{1} << (n() + 1u); }
  /// 2^n, the exponent appearing in m(kappa).
  std::uint64_t half_theta_exponent() const { return std::uint64_t{1} << n(); }
  std::uint64_t polynomial() const { return _poly; }
  bool has_tables() const { return !_exp.empty(); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Throws std::out_of_range if bits >= q.
  Elem element(std::uint64_t bits) const;

  Elem add(Elem a, Elem b) const { return Elem{a.bits ^ b.bits}; }
  Elem mul(Elem a, Elem b) const;
  Elem mul_schoolbook(Elem a, Elem b) const;
  Elem square(Elem a) const { return mul(a, a); }
  /// Throws std::domain_error("division by zero in GF(q)") on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Negative exponents go through inv(); pow(0, e < 0) throws.
  Elem pow(Elem a, std::int64_t e) const;
  /// a^(2^(n+1)) by n+1 squarings.
  Elem theta(Elem a) const;

  /// All q elements in ascending bit order.
  std::vector<Elem> elements() const;

  /// Multiplicative order of a != 0.
  std::uint64_t multiplicative_order(Elem a) const;
  /// Least (by bits) generator of the multiplicative group.
  Elem primitive_element() const;

private:
  unsigned _m;
  std::uint64_t _poly;
  std::vector<std::uint32_t> _log;
  std::vector<std::uint32_t> _exp;
};

} // namespace stod
