#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stod
{

enum class ExportFormat { json, matrix, blocks };

struct RunConfig
{
  std::uint64_t q = 8;
  std::vector<int> families{2, 3};
  std::optional<std::uint64_t> poly;
  std::string out;
  ExportFormat format = ExportFormat::json;
  bool exhaustive_triples = false;
  bool verify_family3_pairs = false;
  bool full_closure = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

namespace exit_code
{
constexpr int ok = 0;
constexpr int verification_failed = 1;
constexpr int usage = 2;
} // namespace exit_code

/// Throws std::invalid_argument with a user-facing message.
void validate(RunConfig const &cfg);

/// Parses "0xD", "0XD" or "D".
std::uint64_t parse_hex(std::string const &text);

/// Output path for one family: out as given for a single family, otherwise
/// with "_family<i>" inserted before the extension.
std::string output_path(RunConfig const &cfg, int family);

int cmd_build(RunConfig const &cfg, std::ostream &out, std::ostream &err);
int cmd_verify(RunConfig const &cfg, std::ostream &out, std::ostream &err);
int cmd_export(RunConfig const &cfg, std::ostream &out, std::ostream &err);

/// Entry point behind the stod executable.
int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace stod
