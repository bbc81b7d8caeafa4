#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stod
{

struct Check
{
  std::string name;
  bool pass = false;
  std::string detail;
  /// Informational checks are printed but never fail a report.
  bool required = true;
};

struct Report
{
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail, bool required = true)
  {
    checks.push_back({std::move(name), pass, std::move(detail), required});
  }
  void info(std::string name, std::string detail)
  {
    checks.push_back({std::move(name), true, std::move(detail), false});
  }
  void append(Report const &other)
  {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool ok() const
  {
    for (auto const &c : checks)
      if (c.required && !c.pass)
        return false;
    return true;
  }

  Check const *find(std::string const &name) const
  {
    for (auto const &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
};

/// One line per check: "PASS <name>: <detail>", "FAIL ..." or "INFO ...".
inline void print(std::ostream &os, Report const &r)
{
  for (auto const &c : r.checks) {
    os << (!c.required ? "INFO" : c.pass ? "PASS" : "FAIL") << ' ' << c.name;
    if (!c.detail.empty())
      os << ": " << c.detail;
    os << '\n';
  }
}

} // namespace stod
