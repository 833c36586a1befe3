#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "valab/cli.hpp"
#include "valab/io.hpp"

namespace {

int emit(const valab::CommandResult& res, bool json) {
  std::cout << (json ? valab::report_json(res.command, res.fixture_id, res.report)
                     : valab::report_text(res.command, res.fixture_id, res.report));
  for (const auto& e : res.errors) std::cerr << "error: " << e << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and invariants for vertex algebroids given by structure constants"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the report as JSON");

  std::string path;
  auto* check = app.add_subcommand("check", "verify every axiom system");
  check->add_option("file", path, "algebroid file")->required();
  auto* inv = app.add_subcommand("invariants", "ring, Leibniz and bilinear-form invariants");
  inv->add_option("file", path, "algebroid file")->required();
  auto* semi = app.add_subcommand("semiconformal", "L(1) family, pinned map, Heisenberg witness");
  semi->add_option("file", path, "algebroid file")->required();
  std::uint64_t seed = 0;
  std::size_t count = 20;
  auto* mut = app.add_subcommand("mutate", "seeded single-coefficient mutation testing");
  mut->add_option("file", path, "algebroid file")->required();
  mut->add_option("--seed", seed, "random seed");
  mut->add_option("--count", count, "number of mutations");
  for (auto* sub : {check, inv, semi, mut}) sub->add_flag("--json", json, "emit the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    const valab::AlgebroidFile file = valab::load_file(path);
    if (check->parsed()) return emit(valab::cmd_check(file), json);
    if (inv->parsed()) return emit(valab::cmd_invariants(file), json);
    if (semi->parsed()) return emit(valab::cmd_semiconformal(file), json);
    return emit(valab::cmd_mutate(file, seed, count), json);
  } catch (const valab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return valab::exit_code_for(e.kind());
  }
}
