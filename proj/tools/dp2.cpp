#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dp2/cli_commands.hpp"

namespace {

dp2::geom::SurfaceCase surface(const std::string& name) { return *dp2::geom::parse_surface_case(name); }

}  // namespace

int main(int argc, char** argv) {
  using namespace dp2::cli;

  CLI::App app{"Exact computations on diagonal degree-2 del Pezzo surfaces and line-arrangement double covers"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  const auto cases = CLI::IsMember({"nonsquare", "square-d"});

  std::string case_name = "square-d";
  unsigned threads = 0;
  auto* lines = app.add_subcommand("lines", "56 exceptional curves, intersection matrix and Gram matrix");
  lines->add_option("--case", case_name, "Surface case")->check(cases)->capture_default_str();
  lines->add_option("--threads", threads, "Worker threads for the 56x56 sweep (0 = hardware)");

  auto* galois = app.add_subcommand("galois", "Galois action tables and matrices, checked against published data");
  galois->add_option("--case", case_name, "Surface case")->check(cases)->capture_default_str();

  std::size_t closure_bound = 4096;
  auto* invariants = app.add_subcommand("invariants", "Invariant lattice, orbits and orbit-sum index");
  invariants->add_option("--case", case_name, "Surface case")->check(cases)->capture_default_str();
  invariants->add_option("--closure-bound", closure_bound, "Maximal group order before giving up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  VerifyOptions vopts;
  std::string config_path;
  int family_q = 0;
  std::uint64_t prime = 0;
  auto* verify = app.add_subcommand("verify", "Check an arrangement and build its double cover");
  verify->add_option("--config", config_path, "Arrangement file (built-in example when omitted)")
      ->check(CLI::ExistingFile);
  verify->add_option("--family-q", family_q, "Use m = 2q - 8 (q >= 4)");
  verify->add_option("--prime", prime, "Override the prime of the arrangement");

  ResidueOptions ropts;
  std::string expect;
  auto* residue = app.add_subcommand("residue", "Residue of the symbol (A, B) along a line");
  residue->add_option("--A", ropts.a, "First entry, a form in x, y, z")->required();
  residue->add_option("--B", ropts.b, "Second entry, a form in x, y, z")->required();
  residue->add_option("--at", ropts.at, "Linear form of the center (z for the line at infinity)")->required();
  residue->add_option("--prime", ropts.prime, "Characteristic")->capture_default_str();
  residue->add_option("--expect", expect, "Fail unless the residue is as expected")
      ->check(CLI::IsMember({"trivial", "nontrivial"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitVerified : kExitUsage;
  }

  Report report;
  if (*lines) {
    report = cmd_lines(surface(case_name), threads);
  } else if (*galois) {
    report = cmd_galois(surface(case_name));
  } else if (*invariants) {
    report = cmd_invariants(surface(case_name), closure_bound);
  } else if (*verify) {
    if (!config_path.empty()) vopts.config_path = config_path;
    if (verify->count("--family-q")) vopts.family_q = family_q;
    if (verify->count("--prime")) vopts.prime = prime;
    report = cmd_verify(vopts);
  } else if (*residue) {
    if (!expect.empty()) ropts.expect_trivial = expect == "trivial";
    report = cmd_residue(ropts);
  }

  const std::string out = report.render(format == "json" ? Format::Json : Format::Text);
  (report.exit_code == kExitUsage ? std::cerr : std::cout) << out;
  return report.exit_code;
}
