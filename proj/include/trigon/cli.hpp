#pragma once

#include "trigon/error.hpp"
#include "trigon/pipeline.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trigon {

// 0 = decided, 2 = unsupported input, 3 = internal failure.
inline constexpr int kExitDecided = 0;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitInternal = 3;

int exit_status(const Error& e);

struct DecideCommand {
  std::string path;
  std::optional<std::string> point; // overrides `point =` in the file
  std::uint64_t seed = 0;
  std::optional<std::string> json_out;
  bool timings = false;
};

int cmd_decide(const DecideCommand& cmd, std::ostream& out, std::ostream& err);

struct GenerateCommand {
  std::string method; // projection | m1 | m2
  std::string params; // d, deg_x, or d[,e]
  std::optional<int> height;
  std::uint64_t seed = 0;
  int budget = kDefaultResampleBudget;
  std::optional<std::string> out_path; // stdout when absent
};

int cmd_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err);

struct BenchJob {
  std::string method;
  std::string params;
  int count = 0;
  int height = 0;
  std::uint64_t seed = 0;
};

// One line per job: method=<m> params=<...> n=<count> height=<bits> [seed=<s>].
// Jobs without seed= get one derived from `seed` and the job index.
std::vector<BenchJob> parse_bench_spec(const std::string& text, std::uint64_t seed);

struct BenchRow {
  std::string generator;
  std::string params;
  int bit_height = 0;
  std::optional<int> genus;
  int deg = 0;
  double seconds = 0;
  bool accepted = false;
  std::string trigonal; // true, false, undetermined, or error:<kind>
  std::optional<bool> agreement;
  std::string rejection;
};

std::vector<BenchRow> run_bench(const std::vector<BenchJob>& jobs);

inline constexpr const char* kBenchHeader = "generator,params,bit_height,genus,deg,seconds,accepted,trigonal,agreement";

std::string bench_csv(const std::vector<BenchRow>& rows);

int cmd_bench(const std::string& spec_path, const std::optional<std::string>& csv_path, std::uint64_t seed, std::ostream& out,
              std::ostream& err);

} // namespace trigon
