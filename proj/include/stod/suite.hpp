#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stod/report.hpp"

namespace stod
{

struct SuiteOptions
{
  std::uint64_t q = 8;
  std::optional<std::uint64_t> poly;
  std::vector<int> families{2, 3};
  bool exhaustive_triples = false;
  bool verify_family3_pairs = false;
  /// Enumerate Sz(q) outright. Only feasible for q = 8, where it is on by
  /// default.
  bool full_closure = true;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// Every check that applies at q: field, ovoid, generators, subgroup laws,
/// K-orbits, transitivity, the enumerated group (q = 8) and both designs.
Report run_verification(SuiteOptions const &opt);

} // namespace stod
