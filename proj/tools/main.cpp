#include "CLI11.hpp"
#include "trigon/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a plane curve is trigonal"};
  app.require_subcommand(1);

  trigon::DecideCommand decide;
  auto* dc = app.add_subcommand("decide", "Run the decision pipeline on a curve file");
  dc->add_option("file", decide.path, "curve file")->required();
  dc->add_option("--point", decide.point, "base point (a:b:c) for genus 3");
  dc->add_option("--seed", decide.seed, "seed for fiber counting");
  dc->add_option("--json-out", decide.json_out, "also write the report here");
  dc->add_flag("--timings", decide.timings, "include stage timings in the report");

  trigon::GenerateCommand gen;
  auto* gc = app.add_subcommand("generate", "Write a random validated curve file");
  gc->add_option("method", gen.method, "projection | m1 | m2")->required()->check(CLI::IsMember({"projection", "m1", "m2"}));
  gc->add_option("params", gen.params, "d for projection, deg_x for m1, d or d,e for m2")->required();
  gc->add_option("--height", gen.height, "coefficient bit height");
  gc->add_option("--seed", gen.seed, "random seed");
  gc->add_option("--budget", gen.budget, "resample budget")->check(CLI::PositiveNumber);
  gc->add_option("-o,--out", gen.out_path, "output file (default stdout)");

  std::string spec;
  std::optional<std::string> csv;
  std::uint64_t bench_seed = 0;
  auto* bc = app.add_subcommand("bench", "Run a benchmark spec and emit CSV");
  bc->add_option("spec", spec, "bench spec file")->required();
  bc->add_option("-o,--out", csv, "CSV file (default stdout)");
  bc->add_option("--seed", bench_seed, "seed for jobs without their own");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : trigon::kExitUnsupported;
  }

  if (*dc) return trigon::cmd_decide(decide, std::cout, std::cerr);
  if (*gc) return trigon::cmd_generate(gen, std::cout, std::cerr);
  return trigon::cmd_bench(spec, csv, bench_seed, std::cout, std::cerr);
}
