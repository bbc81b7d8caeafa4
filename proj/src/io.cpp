#include "stod/io.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stod
{

std::string hex_string(std::uint64_t x)
{
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << x;
  return os.str();
}

std::string summary_line(Design const &d)
{
  DesignParams const &p = d.params;
  std::ostringstream os;
  os << "q=" << d.q << " family=" << d.family << " v=" << p.v << " k=" << p.k
     << " lambda=" << p.lambda << " b=" << p.b << " r=" << p.r
     << " gcd(r,lambda)=" << std::gcd(p.r, p.lambda);
  return os.str();
}

std::string to_json(Design const &d, Ovoid const &ovoid)
{
  using nlohmann::json;
  DesignParams const &p = d.params;

  json points = json::array();
  for (Index i = 0u; i < ovoid.size(); ++i) {
    if (auto const *a = std::get_if<Affine>(&ovoid.point(i)))
      points.push_back(json::array({a->alpha.bits, a->beta.bits}));
    else
      points.push_back("inf");
  }

  json j;
  j["q"] = d.q;
  j["family"] = d.family;
  j["poly"] = hex_string(ovoid.field().polynomial());
  j["v"] = p.v;
  j["k"] = p.k;
  j["lambda"] = p.lambda;
  j["b"] = p.b;
  j["r"] = p.r;
  j["points"] = std::move(points);
  j["blocks"] = d.blocks;
  return j.dump() + "\n";
}

std::string to_matrix(Design const &d)
{
  DesignParams const &p = d.params;
  std::string out = std::to_string(p.v) + " " + std::to_string(p.b) + " " +
                    std::to_string(p.k) + " " + std::to_string(p.lambda) + " " +
                    std::to_string(p.r) + "\n";

  std::vector<std::string> rows(p.v, std::string(d.blocks.size(), '0'));
  for (std::size_t c = 0u; c < d.blocks.size(); ++c)
    for (Index i : d.blocks[c])
      rows[i][c] = '1';
  out.reserve(out.size() + p.v * (d.blocks.size() + 1u));
  for (auto const &row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string to_blocks(Design const &d, Ovoid const &ovoid)
{
  DesignParams const &p = d.params;
  std::ostringstream os;
  os << "# q=" << d.q << " family=" << d.family
     << " poly=" << hex_string(ovoid.field().polynomial()) << " v=" << p.v << " k=" << p.k
     << " lambda=" << p.lambda << " b=" << p.b << " r=" << p.r << '\n';
  for (auto const &blk : d.blocks) {
    for (std::size_t i = 0u; i < blk.size(); ++i)
      os << (i ? " " : "") << blk[i];
    os << '\n';
  }
  return os.str();
}

Design design_from_json(std::string const &text)
{
  using nlohmann::json;
  try {
    json const j = json::parse(text);
    Design d;
    d.q = j.at("q").get<std::uint64_t>();
    d.family = j.at("family").get<int>();
    d.params.v = j.at("v").get<std::uint64_t>();
    d.params.k = j.at("k").get<std::uint64_t>();
    d.params.lambda = j.at("lambda").get<std::uint64_t>();
    d.params.b = j.at("b").get<std::uint64_t>();
    d.params.r = j.at("r").get<std::uint64_t>();
    d.blocks = j.at("blocks").get<std::vector<Block>>();
    if (j.at("points").size() != d.params.v)
      throw std::invalid_argument("point list length differs from v");
    return d;
  } catch (json::exception const &e) {
    throw std::invalid_argument(std::string("malformed design JSON: ") + e.what());
  }
}

} // namespace stod
