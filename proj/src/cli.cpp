#include "trigon/cli.hpp"

#include "trigon/rng.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace trigon {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.kind());
  if (!e.stage().empty()) err << " [" << e.stage() << "]";
  err << ": " << e.what() << "\n";
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) fail(ErrorKind::ParseError, what + " must be an integer, got '" + text + "'");
  return v;
}

struct Params {
  int primary = 0;
  std::optional<int> height;
};

// "5", "3", "4,2" or "(4,2)".
Params parse_params(const std::string& method, std::string text) {
  if (method != "projection" && method != "m1" && method != "m2") fail(ErrorKind::InvalidInput, "unknown method '" + method + "'");
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  Params p;
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    p.primary = parse_int(text, "params");
    return p;
  }
  if (method != "m2") fail(ErrorKind::ParseError, method + " takes a single parameter, got '" + text + "'");
  p.primary = parse_int(text.substr(0, comma), "d");
  p.height = parse_int(text.substr(comma + 1), "e");
  return p;
}

int default_height(const std::string& method) { return method == "m1" ? 5 : 3; }

int resolve_height(const std::string& method, const Params& p, std::optional<int> requested) {
  if (p.height && requested && *p.height != *requested)
    fail(ErrorKind::InvalidInput, "height " + std::to_string(*requested) + " conflicts with e = " + std::to_string(*p.height));
  if (p.height) return *p.height;
  return requested ? *requested : default_height(method);
}

GeneratedCurve generate(const std::string& method, int primary, int height, std::uint64_t seed, int budget) {
  if (method == "projection") return gen_trigonal_projection(primary, height, seed, budget);
  if (method == "m1") return gen_method1(primary, height, seed, budget);
  return gen_method2(primary, height, seed, budget);
}

// Degree of the first candidate a budget-1 generator would have drawn.
int candidate_degree(const std::string& method, int primary, int height, std::uint64_t seed) {
  if (method == "projection") return primary;
  const std::uint64_t s = Rng(seed).split(0).next();
  return (method == "m1" ? sample_method1(primary, height, s) : sample_method2(primary, height, s)).total_degree();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

int exit_status(const Error& e) { return is_input_error(e.kind()) ? kExitUnsupported : kExitInternal; }

int cmd_decide(const DecideCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const CurveFile file = parse_curve_file(read_file(cmd.path));
    const PlaneCurve c = validate_curve(file.f, file.sings);
    DecideOptions opts;
    opts.seed = cmd.seed;
    if (cmd.point) opts.base_point = parse_point(*cmd.point, file.field);
    else opts.base_point = file.point;
    const Report r = decide(c, opts);
    const std::string json = report_json(r, cmd.timings);
    out << json << "\n";
    if (cmd.json_out) write_file(*cmd.json_out, json + "\n");
    if (!r.trigonal) {
      err << "undecided: " << to_string(r.case_kind) << "\n";
      return kExitUnsupported;
    }
    return kExitDecided;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_status(e);
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const Params p = parse_params(cmd.method, cmd.params);
    const int height = resolve_height(cmd.method, p, cmd.height);
    const GeneratedCurve g = generate(cmd.method, p.primary, height, cmd.seed, cmd.budget);
    CurveFile file;
    file.f = g.curve.f;
    file.field = g.curve.field();
    file.sings = g.curve.sings;
    file.comments.push_back("generator " + cmd.method + " params " + cmd.params + " height " + std::to_string(height));
    file.comments.push_back("seed " + std::to_string(cmd.seed) + " attempts " + std::to_string(g.attempts));
    file.comments.push_back("genus " + std::to_string(g.curve.genus));
    const std::string text = write_curve_file(file);
    if (cmd.out_path) write_file(*cmd.out_path, text);
    else out << text;
    return kExitDecided;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_status(e);
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::vector<BenchJob> parse_bench_spec(const std::string& text, std::uint64_t seed) {
  std::vector<BenchJob> jobs;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    BenchJob job;
    std::optional<std::uint64_t> own_seed;
    bool any = false, has_n = false, has_height = false;
    const std::string where = "bench spec line " + std::to_string(number) + ": ";
    while (words >> word) {
      any = true;
      const auto eq = word.find('=');
      if (eq == std::string::npos) fail(ErrorKind::ParseError, where + "expected key=value, got '" + word + "'");
      const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
      try {
        if (key == "method") job.method = value;
        else if (key == "params") job.params = value;
        else if (key == "n") job.count = parse_int(value, "n"), has_n = true;
        else if (key == "height") job.height = parse_int(value, "height"), has_height = true;
        else if (key == "seed") own_seed = std::stoull(value);
        else fail(ErrorKind::ParseError, "unknown key '" + key + "'");
      } catch (const Error& e) {
        fail(ErrorKind::ParseError, where + e.what());
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, where + "bad value for " + key);
      }
    }
    if (!any) continue;
    if (job.method.empty() || job.params.empty() || !has_n) fail(ErrorKind::ParseError, where + "method, params and n are required");
    if (job.count < 0) fail(ErrorKind::ParseError, where + "n must be non-negative");
    try {
      const Params p = parse_params(job.method, job.params);
      job.height = resolve_height(job.method, p, has_height ? std::optional<int>(job.height) : std::nullopt);
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, where + e.what());
    }
    job.seed = own_seed ? *own_seed : Rng(seed).split(jobs.size()).next();
    jobs.push_back(job);
  }
  return jobs;
}

std::vector<BenchRow> run_bench(const std::vector<BenchJob>& jobs) {
  std::vector<BenchRow> rows;
  for (const auto& job : jobs) {
    const Params p = parse_params(job.method, job.params);
    const Rng root(job.seed);
    for (int i = 0; i < job.count; ++i) {
      const std::uint64_t s = root.split(static_cast<std::uint64_t>(i)).next();
      BenchRow row;
      row.generator = job.method;
      row.params = job.params;
      row.bit_height = job.height;
      GeneratedCurve g;
      try {
        g = generate(job.method, p.primary, job.height, s, 1);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GenerationFailed) throw;
        row.deg = candidate_degree(job.method, p.primary, job.height, s);
        row.rejection = e.what();
        rows.push_back(row);
        continue;
      }
      row.accepted = true;
      row.genus = g.curve.genus;
      row.deg = g.curve.degree;
      const auto start = std::chrono::steady_clock::now();
      try {
        DecideOptions opts;
        opts.seed = s;
        const Report r = decide(g.curve, opts);
        row.trigonal = r.trigonal ? (*r.trigonal ? "true" : "false") : "undetermined";
        row.agreement = r.agreement;
      } catch (const Error& e) {
        row.trigonal = "error:" + std::string(to_string(e.kind()));
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchHeader << "\n";
  for (const auto& r : rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    out << csv_field(r.generator) << ',' << csv_field(r.params) << ',' << r.bit_height << ',' << (r.genus ? std::to_string(*r.genus) : "") << ','
        << r.deg << ',' << secs << ',' << (r.accepted ? "true" : "false") << ',' << r.trigonal << ','
        << (r.agreement ? (*r.agreement ? "true" : "false") : "") << "\n";
  }
  return out.str();
}

int cmd_bench(const std::string& spec_path, const std::optional<std::string>& csv_path, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  try {
    const auto rows = run_bench(parse_bench_spec(read_file(spec_path), seed));
    const std::string csv = bench_csv(rows);
    if (csv_path) write_file(*csv_path, csv);
    else out << csv;
    std::size_t accepted = 0;
    for (const auto& r : rows) accepted += r.accepted;
    err << "accepted " << accepted << " of " << rows.size() << " samples\n";
    return kExitDecided;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_status(e);
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}

} // namespace trigon
