#include "stod/pg3.hpp"

#include <stdexcept>
#include <vector>

namespace stod
{

Mat4 Mat4::identity()
{
  Mat4 res;
  for (unsigned i = 1u; i <= 4u; ++i)
    res.at(i, i) = Elem{1};
  return res;
}

Mat4 Mat4::unit(unsigned i, unsigned j)
{
  if (i < 1u || i > 4u || j < 1u || j > 4u)
    throw std::out_of_range("e_ij index out of range");
  Mat4 res;
  res.at(i, j) = Elem{1};
  return res;
}

Vec4 normalize(Field const &f, Vec4 const &w)
{
  for (Elem c : w) {
    if (c.bits != 0u) {
      if (c == f.one())
        return w;
      Elem s = f.inv(c);
      Vec4 res;
      for (std::size_t i = 0u; i < 4u; ++i)
        res[i] = f.mul(w[i], s);
      return res;
    }
  }
  return w;
}

ProjPoint ProjPoint::from_vector(Field const &f, Vec4 const &w)
{
  Vec4 n = normalize(f, w);
  if (n == Vec4{})
    throw std::invalid_argument("the zero vector is not a projective point");
  return ProjPoint(n);
}

Mat4 mat_add(Field const &f, Mat4 const &a, Mat4 const &b)
{
  Mat4 res;
  for (std::size_t i = 0u; i < 4u; ++i)
    for (std::size_t j = 0u; j < 4u; ++j)
      res.rows[i][j] = f.add(a.rows[i][j], b.rows[i][j]);
  return res;
}

Mat4 mat_scale(Field const &f, Elem c, Mat4 const &a)
{
  Mat4 res;
  for (std::size_t i = 0u; i < 4u; ++i)
    for (std::size_t j = 0u; j < 4u; ++j)
      res.rows[i][j] = f.mul(c, a.rows[i][j]);
  return res;
}

Mat4 mat_mul(Field const &f, Mat4 const &a, Mat4 const &b)
{
  Mat4 res;
  for (std::size_t i = 0u; i < 4u; ++i)
    res.rows[i] = vec_mul(f, a.rows[i], b);
  return res;
}

Vec4 vec_mul(Field const &f, Vec4 const &w, Mat4 const &g)
{
  Vec4 res{};
  for (std::size_t k = 0u; k < 4u; ++k) {
    if (w[k].bits == 0u)
      continue;
    for (std::size_t j = 0u; j < 4u; ++j)
      res[j] = f.add(res[j], f.mul(w[k], g.rows[k][j]));
  }
  return res;
}

Mat4 mat_inverse(Field const &f, Mat4 const &a)
{
  Mat4 m = a;
  Mat4 inv = Mat4::identity();

  for (std::size_t col = 0u; col < 4u; ++col) {
    std::size_t piv = col;
    while (piv < 4u && m.rows[piv][col].bits == 0u)
      ++piv;
    if (piv == 4u)
      throw std::domain_error("matrix is singular");
    std::swap(m.rows[col], m.rows[piv]);
    std::swap(inv.rows[col], inv.rows[piv]);

    Elem s = f.inv(m.rows[col][col]);
    for (std::size_t j = 0u; j < 4u; ++j) {
      m.rows[col][j] = f.mul(m.rows[col][j], s);
      inv.rows[col][j] = f.mul(inv.rows[col][j], s);
    }
    for (std::size_t i = 0u; i < 4u; ++i) {
      Elem c = m.rows[i][col];
      if (i == col || c.bits == 0u)
        continue;
      for (std::size_t j = 0u; j < 4u; ++j) {
        m.rows[i][j] = f.add(m.rows[i][j], f.mul(c, m.rows[col][j]));
        inv.rows[i][j] = f.add(inv.rows[i][j], f.mul(c, inv.rows[col][j]));
      }
    }
  }
  return inv;
}

ProjPoint act(Field const &f, ProjPoint const &p, Mat4 const &g)
{
  Vec4 w = vec_mul(f, p.coords(), g);
  if (w == Vec4{})
    throw std::logic_error("matrix annihilated a projective point");
  return ProjPoint::from_vector(f, w);
}

unsigned rank(Field const &f, std::span<Vec4 const> rows)
{
  std::vector<Vec4> m(rows.begin(), rows.end());
  unsigned r = 0u;
  for (std::size_t col = 0u; col < 4u && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col].bits == 0u)
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[r], m[piv]);

    Elem s = f.inv(m[r][col]);
    for (std::size_t i = r + 1u; i < m.size(); ++i) {
      if (m[i][col].bits == 0u)
        continue;
      Elem c = f.mul(m[i][col], s);
      for (std::size_t j = col; j < 4u; ++j)
        m[i][j] = f.add(m[i][j], f.mul(c, m[r][j]));
    }
    ++r;
  }
  return r;
}

unsigned rank(Field const &f, Mat4 const &a)
{
  return rank(f, std::span<Vec4 const>(a.rows));
}

bool collinear(Field const &f, ProjPoint const &a, ProjPoint const &b,
               ProjPoint const &c)
{
  if (a == b || a == c || b == c)
    throw std::invalid_argument("points must be pairwise distinct");
  std::array<Vec4, 3> const rows{a.coords(), b.coords(), c.coords()};
  return rank(f, rows) <= 2u;
}

} // namespace stod
