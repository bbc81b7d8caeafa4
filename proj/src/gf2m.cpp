#include "stod/gf2m.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace stod
{

namespace
{

unsigned poly_degree(std::uint64_t p)
{
  return p == 0u ? 0u : 63u - static_cast<unsigned>(std::countl_zero(p));
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f)
{
  unsigned df = poly_degree(f);
  while (a != 0u && poly_degree(a) >= df)
    a ^= f << (poly_degree(a) - df);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b)
{
  while (b != 0u) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod poly
std::uint64_t x_pow_two_pow(unsigned k, std::uint64_t poly, unsigned m)
{
  std::uint64_t r = poly_mod(0b10u, poly);
  for (unsigned i = 0u; i < k; ++i)
    r = poly_mulmod(r, r, poly, m);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t p = 2u; p * p <= x; ++p) {
    if (x % p == 0u) {
      res.push_back(p);
      while (x % p == 0u)
        x /= p;
    }
  }
  if (x > 1u)
    res.push_back(x);
  return res;
}

std::string hex(std::uint64_t v)
{
  static char const digits[] = "0123456789ABCDEF";
  std::string s;
  do {
    s.insert(s.begin(), digits[v & 0xFu]);
    v >>= 4u;
  } while (v != 0u);
  return "0x" + s;
}

} // namespace

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t poly,
                          unsigned m)
{
  std::uint64_t const top = std::uint64_t{1} << m;
  std::uint64_t res = 0u;
  a = poly_mod(a, poly);
  while (b != 0u) {
    if (b & 1u)
      res ^= a;
    b >>= 1u;
    a <<= 1u;
    if (a & top)
      a ^= poly;
  }
  return res;
}

bool is_irreducible(std::uint64_t poly, unsigned m)
{
  if (m == 0u || m > 62u || poly_degree(poly) != m)
    return false;

  if (x_pow_two_pow(m, poly, m) != 0b10u)
    return false;

  for (std::uint64_t p : prime_factors(m)) {
    std::uint64_t h = x_pow_two_pow(m / static_cast<unsigned>(p), poly, m) ^ 0b10u;
    if (poly_gcd(poly, h) != 1u)
      return false;
  }
  return true;
}

std::optional<std::uint64_t> default_polynomial(unsigned m)
{
  switch (m) {
    case 3: return 0xBu;      // x^3 + x + 1
    case 5: return 0x25u;     // x^5 + x^2 + 1
    case 7: return 0x83u;     // x^7 + x + 1
    case 9: return 0x211u;    // x^9 + x^4 + 1
    case 11: return 0x805u;   // x^11 + x^2 + 1
    case 13: return 0x201Bu;  // x^13 + x^4 + x^3 + x + 1
    default: return std::nullopt;
  }
}

bool is_admissible_order(std::uint64_t q)
{
  if (q < 8u || !std::has_single_bit(q))
    return false;
  return std::countr_zero(q) % 2 == 1;
}

Field::Field(unsigned m, std::optional<std::uint64_t> poly, bool use_tables)
  : _m(m)
{
  if (m < 3u || m % 2u == 0u || m > 31u)
    throw std::invalid_argument("field degree must be odd and in [3, 31], got " +
                                std::to_string(m));

  if (!poly) {
    poly = default_polynomial(m);
    if (!poly)
      throw std::invalid_argument("no default polynomial for degree " +
                                  std::to_string(m) + "; supply one");
  }
  if (poly_degree(*poly) != m)
    throw std::invalid_argument("polynomial " + hex(*poly) + " does not have degree " +
                                std::to_string(m));
  if (!is_irreducible(*poly, m))
    throw std::invalid_argument("polynomial " + hex(*poly) +
                                " is reducible over GF(2)");
  _poly = *poly;

  if (use_tables && m <= 16u) {
    std::uint64_t const q = order();
    Elem g = primitive_element();
    _exp.resize(2u * (q - 1u));
    _log.assign(q, 0u);
    std::uint64_t x = 1u;
    for (std::uint64_t i = 0u; i < q - 1u; ++i) {
      _exp[i] = static_cast<std::uint32_t>(x);
      _exp[i + q - 1u] = static_cast<std::uint32_t>(x);
      _log[x] = static_cast<std::uint32_t>(i);
      x = poly_mulmod(x, g.bits, _poly, _m);
    }
  }
}

Field Field::of_order(std::uint64_t q, std::optional<std::uint64_t> poly)
{
  if (!is_admissible_order(q))
    throw std::invalid_argument("q must be an odd power of 2, q >= 8 (got " +
                                std::to_string(q) + ")");
  return Field(static_cast<unsigned>(std::countr_zero(q)), poly);
}

Elem Field::element(std::uint64_t bits) const
{
  if (bits >= order())
    throw std::out_of_range("value " + std::to_string(bits) +
                            " is not an element of GF(" +
                            std::to_string(order()) + ")");
  return Elem{bits};
}

Elem Field::mul_schoolbook(Elem a, Elem b) const
{
  return Elem{poly_mulmod(a.bits, b.bits, _poly, _m)};
}

Elem Field::mul(Elem a, Elem b) const
{
  if (_exp.empty())
    return mul_schoolbook(a, b);
  if (a.bits == 0u || b.bits == 0u)
    return Elem{0};
  return Elem{_exp[_log[a.bits] + _log[b.bits]]};
}

Elem Field::inv(Elem a) const
{
  if (a.bits == 0u)
    throw std::domain_error("division by zero in GF(q)");
  return pow(a, static_cast<std::int64_t>(order() - 2u));
}

Elem Field::pow(Elem a, std::int64_t e) const
{
  if (e < 0) {
    if (a.bits == 0u)
      throw std::domain_error("division by zero in GF(q)");
    // a^(q-1) = 1, so a^e = a^(e mod (q-1)).
    auto const group = static_cast<std::int64_t>(order() - 1u);
    e %= group;
    if (e < 0)
      e += group;
  }

  Elem res = one();
  Elem base = a;
  auto u = static_cast<std::uint64_t>(e);
  while (u != 0u) {
    if (u & 1u)
      res = mul(res, base);
    base = mul(base, base);
    u >>= 1u;
  }
  return res;
}

Elem Field::theta(Elem a) const
{
  for (unsigned i = 0u; i <= n(); ++i)
    a = mul(a, a);
  return a;
}

std::vector<Elem> Field::elements() const
{
  std::vector<Elem> res;
  res.reserve(order());
  for (std::uint64_t b = 0u; b < order(); ++b)
    res.push_back(Elem{b});
  return res;
}

std::uint64_t Field::multiplicative_order(Elem a) const
{
  if (a.bits == 0u)
    throw std::domain_error("zero has no multiplicative order");

  std::uint64_t ord = order() - 1u;
  for (std::uint64_t p : prime_factors(order() - 1u)) {
    while (ord % p == 0u) {
      Elem t = one();
      Elem base = a;
      for (std::uint64_t u = ord / p; u != 0u; u >>= 1u) {
        if (u & 1u)
          t = mul_schoolbook(t, base);
        base = mul_schoolbook(base, base);
      }
      if (t != one())
        break;
      ord /= p;
    }
  }
  return ord;
}

Elem Field::primitive_element() const
{
  for (std::uint64_t b = 2u; b < order(); ++b) {
    if (multiplicative_order(Elem{b}) == order() - 1u)
      return Elem{b};
  }
  // q-1 >= 7 always has a generator other than 1.
  throw std::logic_error("no primitive element found");
}

} // namespace stod
