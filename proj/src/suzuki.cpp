#include "stod/suzuki.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "stod/errors.hpp"

namespace stod
{

namespace
{

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string describe(Generator const &g)
{
  std::ostringstream os;
  std::visit(overloaded{
               [&](SGen const &s) { os << "s(" << s.x.bits << "," << s.y.bits << ")"; },
               [&](MGen const &m) { os << "m(" << m.kappa.bits << ")"; },
               [&](TauGen const &) { os << "tau"; },
             },
             g);
  return os.str();
}

Elem one_plus_theta(Field const &f, Elem kappa)
{
  return f.mul(kappa, f.theta(kappa));
}

Mat4 gen_s(Field const &f, Elem x, Elem y)
{
  Elem const x1t = one_plus_theta(f, x);

  Mat4 s = Mat4::identity();
  s.at(2, 1) = x;
  s.at(3, 1) = y;
  s.at(3, 2) = f.theta(x);
  s.at(4, 1) = f.add(f.add(f.mul(x, x1t), f.mul(x, y)), f.theta(y));
  s.at(4, 2) = f.add(x1t, y);
  s.at(4, 3) = x;
  return s;
}

Mat4 gen_m(Field const &f, Elem kappa)
{
  if (kappa.bits == 0u)
    throw std::invalid_argument("m(kappa) requires kappa != 0");

  auto const h = static_cast<std::int64_t>(f.half_theta_exponent());
  Mat4 m;
  m.at(1, 1) = f.pow(kappa, 1 + h);
  m.at(2, 2) = f.pow(kappa, h);
  m.at(3, 3) = f.pow(kappa, -h);
  m.at(4, 4) = f.pow(kappa, -1 - h);
  return m;
}

Mat4 gen_tau()
{
  Mat4 t;
  t.at(1, 4) = Elem{1};
  t.at(2, 3) = Elem{1};
  t.at(3, 2) = Elem{1};
  t.at(4, 1) = Elem{1};
  return t;
}

Mat4 to_matrix(Field const &f, Generator const &g)
{
  return std::visit(overloaded{
                      [&](SGen const &s) { return gen_s(f, s.x, s.y); },
                      [&](MGen const &m) { return gen_m(f, m.kappa); },
                      [&](TauGen const &) { return gen_tau(); },
                    },
                    g);
}

ProjPoint point_p(Field const &f, Elem alpha, Elem beta)
{
  Elem const a2t = f.mul(f.mul(alpha, alpha), f.theta(alpha));
  Elem const first = f.add(f.add(a2t, f.mul(alpha, beta)), f.theta(beta));
  return ProjPoint::from_vector(f, Vec4{first, beta, alpha, f.one()});
}

ProjPoint infinity_point(Field const &f)
{
  return ProjPoint::from_vector(f, Vec4{f.one(), f.zero(), f.zero(), f.zero()});
}

Ovoid::Ovoid(Field field) : _field(std::move(field))
{
  std::uint64_t const q = _field.order();
  std::size_t const v = q * q + 1u;
  _points.reserve(v);
  _proj.reserve(v);
  _index.reserve(v);

  _points.emplace_back(Infinity{});
  _proj.push_back(infinity_point(_field));
  for (std::uint64_t a = 0u; a < q; ++a) {
    for (std::uint64_t b = 0u; b < q; ++b) {
      _points.emplace_back(Affine{Elem{a}, Elem{b}});
      _proj.push_back(point_p(_field, Elem{a}, Elem{b}));
    }
  }

  for (std::size_t i = 0u; i < v; ++i) {
    auto [it, fresh] = _index.emplace(_proj[i], static_cast<Index>(i));
    if (!fresh) {
      throw VerificationError("ovoid points " + std::to_string(it->second) +
                              " and " + std::to_string(i) + " coincide");
    }
  }
}

Index Ovoid::index_of(OvoidPoint const &p) const
{
  if (std::holds_alternative<Infinity>(p))
    return infinity();
  auto const &a = std::get<Affine>(p);
  return static_cast<Index>(1u + a.alpha.bits * q() + a.beta.bits);
}

std::optional<Index> Ovoid::index_of(ProjPoint const &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

OvoidPoint Ovoid::act_fast(OvoidPoint const &p, Generator const &g) const
{
  Field const &f = _field;

  if (auto const *s = std::get_if<SGen>(&g)) {
    auto const *a = std::get_if<Affine>(&p);
    if (a == nullptr)
      return p;
    Elem const tx = f.theta(s->x);
    Elem beta = f.add(a->beta, s->y);
    beta = f.add(beta, f.mul(a->alpha, tx));
    beta = f.add(beta, f.mul(s->x, tx));
    return Affine{f.add(a->alpha, s->x), beta};
  }

  if (auto const *m = std::get_if<MGen>(&g)) {
    auto const *a = std::get_if<Affine>(&p);
    if (a == nullptr)
      return p;
    return Affine{f.mul(a->alpha, m->kappa),
                  f.mul(a->beta, one_plus_theta(f, m->kappa))};
  }

  return _points[act_matrix(index_of(p), gen_tau())];
}

Index Ovoid::act_fast(Index i, Generator const &g) const
{
  return index_of(act_fast(_points.at(i), g));
}

Index Ovoid::act_matrix(Index i, Mat4 const &g) const
{
  auto img = index_of(act(_field, _proj.at(i), g));
  if (!img)
    throw VerificationError("matrix does not preserve the ovoid");
  return *img;
}

std::string to_string(Subgroup s)
{
  switch (s) {
    case Subgroup::Q: return "Q";
    case Subgroup::Q0: return "Q0";
    case Subgroup::M: return "M";
    case Subgroup::H: return "H";
    case Subgroup::K: return "K";
  }
  return "?";
}

std::uint64_t subgroup_order(std::uint64_t q, Subgroup s)
{
  switch (s) {
    case Subgroup::Q: return q * q;
    case Subgroup::Q0: return q;
    case Subgroup::M: return q - 1u;
    case Subgroup::H: return q * q * (q - 1u);
    case Subgroup::K: return q * (q - 1u);
  }
  return 0u;
}

std::uint64_t suzuki_order(std::uint64_t q)
{
  return q * q * (q * q + 1u) * (q - 1u);
}

std::vector<Mat4> enumerate_subgroup(Field const &f, Subgroup s)
{
  std::vector<Mat4> res;
  auto const elems = f.elements();
  std::vector<Mat4> ms;
  for (Elem k : elems)
    if (k.bits != 0u)
      ms.push_back(gen_m(f, k));

  switch (s) {
    case Subgroup::Q:
      for (Elem x : elems)
        for (Elem y : elems)
          res.push_back(gen_s(f, x, y));
      break;
    case Subgroup::Q0:
      for (Elem y : elems)
        res.push_back(gen_s(f, f.zero(), y));
      break;
    case Subgroup::M:
      res = ms;
      break;
    case Subgroup::H:
      for (Elem x : elems)
        for (Elem y : elems) {
          Mat4 const sxy = gen_s(f, x, y);
          for (Mat4 const &m : ms)
            res.push_back(mat_mul(f, sxy, m));
        }
      break;
    case Subgroup::K:
      for (Elem y : elems) {
        Mat4 const s0y = gen_s(f, f.zero(), y);
        for (Mat4 const &m : ms)
          res.push_back(mat_mul(f, s0y, m));
      }
      break;
  }
  return res;
}

std::vector<Index> delta(Ovoid const &ovoid, int which)
{
  Field const &f = ovoid.field();
  std::vector<Index> res;
  switch (which) {
    case 1:
      res.push_back(Ovoid::infinity());
      break;
    case 2:
      for (Elem b : f.elements())
        res.push_back(ovoid.index_of(Affine{f.zero(), b}));
      break;
    case 3:
      for (Elem a : f.elements())
        if (a.bits != 0u)
          for (Elem b : f.elements())
            res.push_back(ovoid.index_of(Affine{a, b}));
      break;
    default:
      throw std::invalid_argument("Delta index must be 1, 2 or 3");
  }
  std::sort(res.begin(), res.end());
  return res;
}

KOrbits k_orbits(Ovoid const &ovoid)
{
  Field const &f = ovoid.field();
  std::vector<Generator> gens;
  for (Elem y : f.elements())
    gens.emplace_back(SGen{f.zero(), y});
  for (Elem k : f.elements())
    if (k.bits != 0u)
      gens.emplace_back(MGen{k});

  std::vector<bool> seen(ovoid.size(), false);
  std::vector<std::vector<Index>> orbits;
  for (Index start = 0u; start < ovoid.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<Index> orbit{start};
    std::deque<Index> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      Index const i = frontier.front();
      frontier.pop_front();
      for (Generator const &g : gens) {
        Index const j = ovoid.act_fast(i, g);
        if (!seen[j]) {
          seen[j] = true;
          orbit.push_back(j);
          frontier.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  if (orbits.size() != 3u)
    throw VerificationError("K has " + std::to_string(orbits.size()) +
                            " orbits on the ovoid, expected 3");

  std::stable_sort(orbits.begin(), orbits.end(),
                   [](auto const &a, auto const &b) { return a.size() < b.size(); });

  KOrbits res{orbits[0], orbits[1], orbits[2]};
  if (res.delta1 != delta(ovoid, 1) || res.delta2 != delta(ovoid, 2) ||
      res.delta3 != delta(ovoid, 3)) {
    throw VerificationError("K-orbits of sizes " + std::to_string(res.delta1.size()) +
                            ", " + std::to_string(res.delta2.size()) + ", " +
                            std::to_string(res.delta3.size()) +
                            " do not match Delta1, Delta2, Delta3");
  }
  return res;
}

} // namespace stod
