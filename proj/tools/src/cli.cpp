#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "sperner/sweep.hpp"
#include "sperner_lab/lab.hpp"

namespace sperner::lab {
namespace {

void configure_logging() {
  static bool done = false;
  if (done) return;
  done = true;
  auto logger = spdlog::stderr_color_mt("sperner-lab");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("SPERNER_LAB_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

struct Shared {
  std::string n;
  std::string r;
  std::string m;
  std::vector<std::string> schemes;
  std::string tiebreak;
  std::uint64_t seed = 0;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t samples = 10000;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--out", s.out, "Output file (records go to stdout when absent)");
  cmd->add_option("--jobs", s.jobs, "Worker threads; output does not depend on it")
      ->check(CLI::Range(1U, 1024U));
  cmd->add_option("--seed", s.seed, "Run seed");
}

int single(const std::string& text, const char* flag) {
  const auto [lo, hi] = parse_range(text);
  if (lo != hi) throw UsageError(std::string(flag) + " takes a single value here");
  return lo;
}

Json solve_config(const Shared& s, bool exhaustive) {
  if (s.n.empty() || s.r.empty()) throw UsageError("solve needs --n and --r");
  const int n = single(s.n, "--n");
  const int r = single(s.r, "--r");
  if (n < 1 || r < 1) throw UsageError("--n and --r must be positive");
  if (s.schemes.empty()) throw UsageError("solve needs at least one --scheme");
  const Tiebreak tb = parse_tiebreak(s.tiebreak, n, s.seed);
  const auto specs = resolve_schemes(s.schemes, n, tb, s.seed);
  std::vector<int> m;
  if (!s.m.empty()) {
    m = parse_int_list(s.m);
  } else if (specs.size() == 1) {
    m = {n - 1};
  } else if (static_cast<int>(specs.size()) == n - 1) {
    m.assign(specs.size(), 1);
  } else {
    throw UsageError("--m is needed for this many colorings");
  }
  if (m.size() != specs.size()) throw UsageError("--m needs one entry per coloring");
  for (int v : m) {
    if (v < 0) throw UsageError("--m entries must be nonnegative");
  }
  Json colorings = Json::array();
  for (const auto& spec : specs) colorings.push_back(to_json(spec));
  return Json{{"command", "solve"}, {"n", n},          {"r", r},
              {"m", m},             {"schemes", s.schemes}, {"tiebreak", tb},
              {"seed", s.seed},     {"colorings", colorings}, {"jobs", s.jobs},
              {"exhaustive", exhaustive}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"sperner-lab: partition complexes, multicolored Sperner solutions and map checks"};
  app.require_subcommand(1);
  Shared s;
  bool exhaustive = false;
  std::string colorings = "1:3";
  std::vector<std::string> families{"random"};
  int seeds = 10;
  std::string trace;
  std::string replay_path;

  auto* build = app.add_subcommand("build", "Build K_{n,r} and report its size");
  build->add_option("--n", s.n, "Number of colors")->required();
  build->add_option("--r", s.r, "Subdivision depth")->required();
  add_shared(build, s);

  auto* solve = app.add_subcommand("solve", "Find solution faces for a set of colorings");
  solve->add_option("--n", s.n, "Number of colors");
  solve->add_option("--r", s.r, "Subdivision depth");
  solve->add_option("--m", s.m, "Size vector, e.g. 1,1,1");
  solve->add_option("--scheme", s.schemes,
                    "longest | ranked:1,3 | example3[:i] | example4[:c1|c2|c3] | random[:seed]")
      ->take_all();
  solve->add_option("--tiebreak", s.tiebreak, "Fallback order, e.g. 2,1,3,4, or 'random'");
  solve->add_flag("--exhaustive", exhaustive, "Enumerate every solution face, not one per facet");
  add_shared(solve, s);

  auto* verify = app.add_subcommand("verify-maps", "Property suite for J, H, rho and the boundary degree");
  verify->add_option("--samples", s.samples, "Random points per property");
  verify->add_option("--n", s.n, "Dimension of the winding check (only 3)");
  verify->add_option("--r", s.r, "Depth of the winding check (default 4)");
  verify->add_option("--trace", trace, "Write the winding trace here");
  add_shared(verify, s);

  auto* sweep = app.add_subcommand("sweep", "Search a parameter grid for disconnected solution sets");
  sweep->add_option("--n", s.n, "Color range a:b (default 2:4)");
  sweep->add_option("--r", s.r, "Depth range a:b (default 1:5)");
  sweep->add_option("--colorings", colorings, "Coloring-count range a:b");
  sweep->add_option("--family", families, "random | ranked | longest | mixed | example3 | example4")
      ->take_all();
  sweep->add_option("--seeds", seeds, "Seeds per grid point")->check(CLI::PositiveNumber);
  sweep->add_option("--samples", s.samples, "Alias of --seeds")->excludes("--seeds");
  add_shared(sweep, s);

  auto* rep = app.add_subcommand("replay", "Rerun a report from its header and compare bytes");
  rep->add_option("file", replay_path, "Report written by an earlier run")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rep) return replay(replay_path, out, err);

    Json cfg;
    if (*build) {
      const int n = single(s.n, "--n");
      const int r = single(s.r, "--r");
      if (n < 1 || r < 1) throw UsageError("--n and --r must be positive");
      cfg = Json{{"command", "build"}, {"n", n}, {"r", r}};
    } else if (*solve) {
      cfg = solve_config(s, exhaustive);
    } else if (*verify) {
      if (!s.n.empty() && single(s.n, "--n") != 3) throw UsageError("the winding check runs at n = 3");
      const int r = s.r.empty() ? 4 : single(s.r, "--r");
      if (r < 1) throw UsageError("--r must be positive");
      cfg = Json{{"command", "verify-maps"}, {"samples", s.samples}, {"seed", s.seed},
                 {"winding_r", r},           {"jobs", s.jobs},       {"trace", trace}};
    } else {
      const auto n = s.n.empty() ? std::pair{2, 4} : parse_range(s.n);
      const auto r = s.r.empty() ? std::pair{1, 5} : parse_range(s.r);
      const auto k = parse_range(colorings);
      if (n.first < 1 || r.first < 1 || k.first < 1) throw UsageError("ranges must be positive");
      for (const auto& f : families) parse_family(f);
      if (sweep->count("--samples")) seeds = static_cast<int>(s.samples);
      cfg = Json{{"command", "sweep"}, {"n", {n.first, n.second}},
                 {"r", {r.first, r.second}}, {"colorings", {k.first, k.second}},
                 {"families", families},     {"seeds", seeds},
                 {"seed", s.seed},           {"jobs", s.jobs}};
    }
    spdlog::debug("run config {}", cfg.dump());
    return execute(cfg, s.out, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sperner::lab
