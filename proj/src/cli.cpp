#include "stod/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "stod/designs.hpp"
#include "stod/errors.hpp"
#include "stod/io.hpp"
#include "stod/suite.hpp"

namespace stod
{

namespace
{

std::string render(RunConfig const &cfg, Design const &d, Ovoid const &ovoid)
{
  switch (cfg.format) {
    case ExportFormat::json: return to_json(d, ovoid);
    case ExportFormat::matrix: return to_matrix(d);
    case ExportFormat::blocks: return to_blocks(d, ovoid);
  }
  return {};
}

void write_file(std::string const &path, std::string const &data)
{
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os)
    throw std::runtime_error("cannot open " + path + " for writing");
  os << data;
  if (!os.flush())
    throw std::runtime_error("write to " + path + " failed");
}

// Builds every requested family and hands each to sink.
template <class Sink>
void for_each_design(RunConfig const &cfg, Sink &&sink)
{
  Field const f = Field::of_order(cfg.q, cfg.poly);
  Ovoid const ovoid(f);
  GeneratorSet const gens = GeneratorSet::compact(ovoid);
  for (int family : cfg.families)
    sink(build_design(ovoid, gens, family), ovoid);
}

template <class Fn>
int guarded(std::ostream &err, Fn &&fn)
{
  try {
    return fn();
  } catch (VerificationError const &e) {
    err << "verification failure: " << e.what() << '\n';
    return exit_code::verification_failed;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

} // namespace

std::uint64_t parse_hex(std::string const &text)
{
  std::string s = text;
  if (s.size() > 2u && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
    s = s.substr(2u);
  if (s.empty() || s.size() > 16u ||
      s.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
    throw std::invalid_argument("not a hexadecimal polynomial: " + text);
  return std::stoull(s, nullptr, 16);
}

void validate(RunConfig const &cfg)
{
  if (!is_admissible_order(cfg.q))
    throw std::invalid_argument("q must be an odd power of 2, q ≥ 8");
  if (cfg.q != 8u && cfg.q != 32u && cfg.q != 128u)
    throw std::invalid_argument("supported q values are 8, 32 and 128");
  if (cfg.full_closure && cfg.q != 8u)
    throw std::invalid_argument("--full-closure is only available for q = 8");
  if (cfg.families.empty())
    throw std::invalid_argument("no design family selected");
  // Throws for a reducible or wrong-degree override.
  if (cfg.poly)
    Field::of_order(cfg.q, cfg.poly);
}

// Block lists beyond these sizes do not fit in memory or on disk.
void validate_construction(RunConfig const &cfg)
{
  validate(cfg);
  if (cfg.q < 128u)
    return;
  for (int fam : cfg.families)
    if (fam == 3)
      throw std::invalid_argument("family 3 at q = 128 is too large to construct; use --family 2");
  if (cfg.format == ExportFormat::matrix)
    throw std::invalid_argument("the incidence matrix at q = 128 is too large; use json or blocks");
}

std::string output_path(RunConfig const &cfg, int family)
{
  if (cfg.families.size() == 1u)
    return cfg.out;
  std::filesystem::path p(cfg.out);
  std::string name = p.stem().string() + "_family" + std::to_string(family) +
                     p.extension().string();
  return (p.parent_path() / name).string();
}

int cmd_build(RunConfig const &cfg, std::ostream &out, std::ostream &err)
{
  return guarded(err, [&] {
    validate_construction(cfg);
    for_each_design(cfg, [&](Design const &d, Ovoid const &ovoid) {
      out << summary_line(d) << '\n';
      if (!cfg.out.empty())
        write_file(output_path(cfg, d.family), render(cfg, d, ovoid));
    });
    return exit_code::ok;
  });
}

int cmd_export(RunConfig const &cfg, std::ostream &out, std::ostream &err)
{
  return guarded(err, [&] {
    validate_construction(cfg);
    for_each_design(cfg, [&](Design const &d, Ovoid const &ovoid) {
      if (cfg.out.empty())
        out << render(cfg, d, ovoid);
      else
        write_file(output_path(cfg, d.family), render(cfg, d, ovoid));
    });
    return exit_code::ok;
  });
}

int cmd_verify(RunConfig const &cfg, std::ostream &out, std::ostream &err)
{
  return guarded(err, [&] {
    validate(cfg);
    SuiteOptions opt;
    opt.q = cfg.q;
    opt.poly = cfg.poly;
    opt.families = cfg.families;
    opt.exhaustive_triples = cfg.exhaustive_triples;
    opt.verify_family3_pairs = cfg.verify_family3_pairs;
    opt.full_closure = cfg.q == 8u;
    opt.seed = cfg.seed;
    opt.workers = cfg.threads;

    Report const rep = run_verification(opt);
    print(out, rep);
    bool const ok = rep.ok();
    out << (ok ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
    if (!cfg.out.empty()) {
      std::ostringstream os;
      print(os, rep);
      write_file(cfg.out, os.str());
    }
    return ok ? exit_code::ok : exit_code::verification_failed;
  });
}

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Suzuki-Tits ovoid designs: construct, verify and export"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string family = "both";
  std::string poly;
  std::string format = "json";

  auto const add_common = [&](CLI::App *sub) {
    sub->add_option("--q", cfg.q, "field order: 8, 32 or 128")->required();
    sub->add_option("--family", family, "design family")
      ->check(CLI::IsMember({"2", "3", "both"}));
    sub->add_option("--poly", poly, "irreducible polynomial as hex, bit i = x^i");
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    sub->add_option("--threads", cfg.threads, "worker threads for pair tallies")
      ->check(CLI::Range(1u, 256u));
  };

  CLI::App *build = app.add_subcommand("build", "build designs and print their parameters");
  CLI::App *verify = app.add_subcommand("verify", "run every applicable verification");
  CLI::App *exp = app.add_subcommand("export", "write designs in a chosen format");
  for (CLI::App *sub : {build, verify, exp})
    add_common(sub);
  for (CLI::App *sub : {build, exp})
    sub->add_option("--format", format, "json, matrix or blocks")
      ->check(CLI::IsMember({"json", "matrix", "blocks"}));
  verify->add_flag("--exhaustive-triples", cfg.exhaustive_triples,
                   "check every ovoid triple for collinearity");
  verify->add_flag("--verify-family3-pairs", cfg.verify_family3_pairs,
                   "full pair tally of family 3 for q > 8");
  verify->add_flag("--full-closure", cfg.full_closure, "enumerate the whole group (q = 8)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (family == "both")
      cfg.families = {2, 3};
    else
      cfg.families = {std::stoi(family)};
    if (!poly.empty())
      cfg.poly = parse_hex(poly);
    static std::map<std::string, ExportFormat> const formats{
      {"json", ExportFormat::json}, {"matrix", ExportFormat::matrix}, {"blocks", ExportFormat::blocks}};
    cfg.format = formats.at(format);
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  if (build->parsed())
    return cmd_build(cfg, out, err);
  if (verify->parsed())
    return cmd_verify(cfg, out, err);
  return cmd_export(cfg, out, err);
}

} // namespace stod
