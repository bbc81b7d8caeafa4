#pragma once

#include <cstdint>
#include <string>

#include "stod/designs.hpp"
#include "stod/suzuki.hpp"

namespace stod
{

std::string hex_string(std::uint64_t x);

/// Summary line: "q=8 family=2 v=65 k=8 lambda=7 b=520 r=64 gcd(r,lambda)=1".
std::string summary_line(Design const &d);

/// {"q", "family", "poly", "v", "k", "lambda", "b", "r", "points", "blocks"};
/// points are "inf" or [alpha_bits, beta_bits] in index order.
std::string to_json(Design const &d, Ovoid const &ovoid);

/// Header "v b k lambda r" (values), then v lines of b '0'/'1' characters.
std::string to_matrix(Design const &d);

/// '#' header with parameters, then one block per line.
std::string to_blocks(Design const &d, Ovoid const &ovoid);

/// Reads a to_json() payload back. Throws std::invalid_argument on
/// malformed input.
Design design_from_json(std::string const &text);

} // namespace stod
