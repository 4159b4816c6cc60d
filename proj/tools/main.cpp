#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace qgl;
using namespace qgl::cli;

namespace {

struct RawFlags {
  std::string entry;
  std::string mode = "family";
  std::string format = "json";
  std::string q0 = "2";
  std::string orientation = "default";
  std::vector<std::string> params;
};

void add_common(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--entry", raw.entry, "catalog entry name");
  sub->add_option("--mode", raw.mode, "closure mode")->check(CLI::IsMember({"single", "family"}));
  sub->add_option("--format", raw.format, "output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--q0", raw.q0, "sample value of q for the numeric cross-check");
  sub->add_option("--orientation", raw.orientation, "C-A edge direction")
      ->check(CLI::IsMember({"default", "flipped"}));
  sub->add_option("--param", raw.params, "entry parameter override NAME=VALUE");
}

Flags resolve(const RawFlags& raw) {
  Flags f;
  if (!raw.entry.empty()) f.entry = raw.entry;
  f.mode = parse_mode(raw.mode);
  f.format = raw.format;
  f.q0 = parse_constant(raw.q0);
  f.orientation = parse_orientation(raw.orientation);
  for (const auto& p : raw.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw Error("--param expects NAME=VALUE, got " + p);
    f.params[p.substr(0, eq)] = parse_constant(p.substr(eq + 1));
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for q-spinor and quantum GL2 representations"};
  app.require_subcommand(1);
  RawFlags raw;
  std::vector<std::string> files;
  bool prime = false;
  bool all_basis = false;
  std::string b_name;
  std::string with;
  std::string matrix;

  auto* verify = app.add_subcommand("verify", "run every check over the catalog");
  auto* commutant = app.add_subcommand("commutant", "B(A) = {B : AB = qBA}, or B'(A) with --prime");
  auto* admissible = app.add_subcommand("admissible", "admissibility of (A, B)");
  auto* centr = app.add_subcommand("centralizer", "centralizer of the given generators");
  auto* closure = app.add_subcommand("closure", "subalgebra generated by the given matrices");
  auto* equiv = app.add_subcommand("equiv", "equivalence of two representations");
  auto* cat = app.add_subcommand("catalog", "export catalog entries as JSON");
  auto* act = app.add_subcommand("act", "inner action on gamma generators, Clifford coordinates");
  for (auto* sub : {verify, commutant, admissible, centr, closure, equiv, cat, act}) add_common(sub, raw);
  for (auto* sub : {commutant, admissible, centr, closure, equiv, act})
    sub->add_option("files", files, "JSON matrix or representation files");
  commutant->add_flag("--prime", prime, "solve B'A = qAB' instead");
  admissible->add_option("--b", b_name, "use this named matrix of the entry as B");
  equiv->add_option("--with", with, "second catalog entry");
  cat->add_option("--matrix", matrix, "print only this matrix of --entry");
  act->add_flag("--all", all_basis, "act on all 16 basis elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the bad-input exit code.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const Flags f = resolve(raw);
    auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); };
    if (verify->parsed()) return cmd_verify(f, std::cout);
    if (commutant->parsed()) return cmd_commutant(f, files, prime, std::cout);
    if (admissible->parsed()) return cmd_admissible(f, files, opt(b_name), std::cout);
    if (centr->parsed()) return cmd_centralizer(f, files, std::cout);
    if (closure->parsed()) return cmd_closure(f, files, std::cout);
    if (equiv->parsed()) return cmd_equiv(f, files, opt(with), std::cout);
    if (cat->parsed()) return cmd_catalog(f, opt(matrix), std::cout);
    if (act->parsed()) return cmd_act(f, files, all_basis, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
