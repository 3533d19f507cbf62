#include <spdlog/spdlog.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include "sperner/parallel.hpp"
#include "sperner/random.hpp"
#include "sperner/sampling.hpp"
#include "sperner/sweep.hpp"
#include "sperner_lab/lab.hpp"

namespace sperner::lab {
namespace {

namespace fs = std::filesystem;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

Json header_line(const Json& config) { return Json{{"run_config", config}}; }

class ReportWriter {
 public:
  /// Writes the header unless `append` is set.
  ReportWriter(const std::string& path, std::ostream& fallback, const Json& config, bool append = false) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
      if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
    if (!append) {
      write(header_line(config));
      write(Json{{"timestamp", utc_timestamp()}});
    }
  }

  void write(const Json& record) {
    *stream_ << record.dump() << '\n';
    stream_->flush();
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

/// Human-readable lines go next to the records only when those are in a file.
std::ostream& summary_stream(const std::string& out_path, std::ostream& out, std::ostream& err) {
  return out_path.empty() ? err : out;
}

std::vector<VertexColoring> realize_all(const std::vector<ColoringSpec>& specs, const PartitionComplex& k) {
  std::vector<VertexColoring> cs;
  for (const auto& s : specs) cs.push_back(realize_coloring(s, k));
  return cs;
}

const Json kInterpretation = {
    {"solution", "size and covering conditions are checked on the same face"},
    {"connected", "bipartite incidence graph of colors and edges is connected and covers N"},
    {"hypertree_sizes", "m_i + 1"}};

// ---------------------------------------------------------------- build

int cmd_build(const Json& cfg, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const int n = cfg.at("n");
  const int r = cfg.at("r");
  const auto k = PartitionComplex::build(n, r);
  ReportWriter w(out_path, out, cfg);
  w.write(Json{{"complex", to_json(k)}});
  const Json summary = {{"vertices", k.partitions().size()},
                        {"facets", k.facets().size()},
                        {"faces", k.complex()->faces().size() - 1},
                        {"dimension", k.complex()->max_face_size() - 1}};
  w.write(Json{{"summary", summary}});
  summary_stream(out_path, out, err) << "K_{" << n << "," << r << "}: " << k.partitions().size()
                                     << " vertices, " << k.facets().size() << " facets\n";
  return kOk;
}

// ---------------------------------------------------------------- solve

std::vector<ColoringSpec> solve_specs(const Json& cfg) {
  std::vector<ColoringSpec> specs;
  for (const auto& s : cfg.at("colorings")) specs.push_back(coloring_spec_from_json(s));
  return specs;
}

int cmd_solve(const Json& cfg, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const int n = cfg.at("n");
  const int r = cfg.at("r");
  const SizeVector m{cfg.at("m").get<std::vector<int>>()};
  const auto specs = solve_specs(cfg);
  const auto k = PartitionComplex::build(n, r);
  const auto cs = realize_all(specs, k);
  for (const auto& c : cs) {
    if (!is_sperner_coloring(k, c)) throw UsageError("a coloring is not Sperner");
  }
  SolveOptions opts;
  opts.jobs = cfg.at("jobs");
  opts.exhaustive = cfg.at("exhaustive");

  ReportWriter w(out_path, out, cfg);
  auto& summary_out = summary_stream(out_path, out, err);
  SolveResult res;
  try {
    res = find_solutions(k, cs, m, opts);
  } catch (const NoSolution& e) {
    w.write(no_solution_bundle(e, specs));
    summary_out << "NO SOLUTION: theorem violation bundle written\n";
    spdlog::error("theorem-sized instance without a size-solution");
    return kNoSolution;
  }

  auto emit = [&](const char* kind, const SolutionReport& rep) {
    Json rec{{"record", kind}};
    const Json body = to_json(rep, k);
    for (const auto& [key, value] : body.items()) rec[key] = value;
    w.write(rec);
  };
  for (const auto& rep : res.facets) emit("facet", rep);
  if (opts.exhaustive) {
    for (const auto& rep : res.all) emit("solution", rep);
  } else {
    for (const auto& rep : res.minimal) emit("minimal", rep);
  }

  std::map<std::string, std::size_t> shapes;
  for (const auto& rep : opts.exhaustive ? res.all : res.minimal) ++shapes[to_string(rep.shape)];
  Json shape_doc = Json::object();
  for (const auto& [name, count] : shapes) shape_doc[name] = count;
  const bool theorem = m.theorem_sized(n);
  const bool full_exists = res.full_facet_count() > 0;
  Json summary = {{"solution_facets", res.facets.size()},
                  {"full_solution_facets", res.full_facet_count()},
                  {"minimal_faces", res.minimal.size()},
                  {"solution_faces", opts.exhaustive ? Json(res.all.size()) : Json(nullptr)},
                  {"shapes", shape_doc},
                  {"connected_exists", res.connected_full_exists()},
                  {"theorem_sized", theorem},
                  {"interpretation", kInterpretation}};
  w.write(Json{{"summary", summary}});

  summary_out << res.facets.size() << " solution facets (" << res.full_facet_count() << " full), "
              << res.minimal.size() << " minimal faces";
  for (const auto& [name, count] : shapes) summary_out << ", " << name << ": " << count;
  summary_out << ", connected solution " << (res.connected_full_exists() ? "exists" : "missing") << '\n';
  if (theorem && !full_exists) {
    summary_out << "PROPERTY FAILURE: no full solution on a theorem-sized instance\n";
    return kPropertyFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify-maps

struct Extreme {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t sample = 0;
  std::size_t failures = 0;
  std::optional<std::uint64_t> first_failure;

  void see(double v, std::uint64_t s, bool failed) {
    if (v > value) {
      value = v;
      sample = s;
    }
    if (failed) {
      ++failures;
      if (!first_failure) first_failure = s;
    }
  }
  void merge(const Extreme& o) {
    if (o.value > value) {
      value = o.value;
      sample = o.sample;
    }
    failures += o.failures;
    if (!first_failure) first_failure = o.first_failure;
  }
};

enum Prop : std::size_t {
  kRoundtrip,
  kJInX,
  kJRowSums,
  kHInY,
  kRhoBoundary,
  kShiftTight,
  kShiftLoose,
  kPropCount
};

struct ChunkStats {
  std::array<Extreme, kPropCount> props;
  std::size_t homotopy_checked = 0;
  std::size_t homotopy_inside = 0;
  std::optional<std::uint64_t> homotopy_first_outside;
};

void sample_once(std::uint64_t seed, std::uint64_t s, ChunkStats& st) {
  SplitMix64 rng(derive_seed(seed, s));
  const auto colors = static_cast<std::size_t>(rng.between(2, 6));
  const int parts = rng.between(1, 4);
  const auto m = random_size_vector(rng, static_cast<int>(colors) - 1, parts);
  const auto y = sample_Y(rng, colors, m);
  const auto x = sample_X(rng, colors, m);

  const double dev = roundtrip_check(y, m);
  st.props[kRoundtrip].see(dev, s, !(dev <= kMapTolerance));

  const auto j = map_J(y, m);
  const bool j_in = in_X(j, m);
  st.props[kJInX].see(j_in ? 0.0 : 1.0, s, !j_in);
  double row_dev = 0.0;
  for (double v : sums(j).per_index) row_dev = std::max(row_dev, std::abs(v - 1.0));
  st.props[kJRowSums].see(row_dev, s, !(row_dev <= kMapTolerance));

  const auto h = map_H(x, m);
  const bool h_in = in_Y(h, m);
  st.props[kHInY].see(h_in ? 0.0 : 1.0, s, !h_in);

  double min_coord = 1.0;
  bool rho_ok = true;
  try {
    const auto p = map_rho(y, m).coords();
    min_coord = *std::min_element(p.begin(), p.end());
  } catch (const std::invalid_argument&) {
    rho_ok = false;
  }
  st.props[kRhoBoundary].see(min_coord, s, !rho_ok || !(min_coord <= kMapTolerance));

  double tight = -1.0;
  double loose = -1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double r = shift_threshold(x.row(i), m[i]);
    tight = std::max(tight, r - 1.0 / (m[i] + 1));
    if (m[i] >= 1) loose = std::max(loose, r - 1.0 / m[i]);
  }
  st.props[kShiftTight].see(tight, s, tight > kMapTolerance);
  st.props[kShiftLoose].see(loose, s, loose > kMapTolerance);

  for (double t : {0.25, 0.5, 0.75}) {
    ++st.homotopy_checked;
    if (in_X(homotopy_point(x, t, m), m)) {
      ++st.homotopy_inside;
    } else if (!st.homotopy_first_outside) {
      st.homotopy_first_outside = s;
    }
  }
}

int cmd_verify_maps(const Json& cfg, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto samples = cfg.at("samples").get<std::uint64_t>();
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const unsigned jobs = cfg.at("jobs");
  const int winding_r = cfg.at("winding_r");

  constexpr std::uint64_t kChunk = 512;
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
  std::vector<ChunkStats> parts(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(samples, lo + kChunk);
    for (std::uint64_t s = lo; s < hi; ++s) sample_once(seed, s, parts[c]);
  });
  ChunkStats total;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < kPropCount; ++i) total.props[i].merge(p.props[i]);
    total.homotopy_checked += p.homotopy_checked;
    total.homotopy_inside += p.homotopy_inside;
    if (!total.homotopy_first_outside) total.homotopy_first_outside = p.homotopy_first_outside;
  }

  ReportWriter w(out_path, out, cfg);
  auto& summary_out = summary_stream(out_path, out, err);
  const std::array<const char*, kPropCount> names{"roundtrip_H_J",     "J_in_X",
                                                 "J_row_sums",        "H_in_Y",
                                                 "rho_on_boundary",   "shift_bound_1_over_m_plus_1",
                                                 "shift_bound_1_over_m"};
  const std::array<const char*, kPropCount> measures{
      "max |H(J(y)) - y|", "1 if J(y) left X", "max |S_i J(y) - 1|", "1 if H(x) left Y",
      "max min-coordinate of rho(y)", "max r_x(i) - 1/(m_i+1)", "max r_x(i) - 1/m_i"};
  std::vector<std::string> failed;
  for (std::size_t i = 0; i < kPropCount; ++i) {
    const auto& e = total.props[i];
    const bool pass = e.failures == 0;
    if (!pass) failed.emplace_back(names[i]);
    w.write(Json{{"property", names[i]},
                 {"asserted", true},
                 {"pass", pass},
                 {"samples", samples},
                 {"measure", measures[i]},
                 {"worst", samples ? Json(e.value) : Json(nullptr)},
                 {"worst_sample", e.sample},
                 {"failures", e.failures},
                 {"first_failure_sample", e.first_failure ? Json(*e.first_failure) : Json(nullptr)},
                 {"tolerance", kMapTolerance},
                 {"seed", seed}});
    summary_out << (pass ? "PASS " : "FAIL ") << names[i] << " worst=" << e.value << '\n';
  }
  w.write(Json{{"property", "homotopy_stays_in_X"},
               {"asserted", false},
               {"checked", total.homotopy_checked},
               {"inside", total.homotopy_inside},
               {"first_outside_sample",
                total.homotopy_first_outside ? Json(*total.homotopy_first_outside) : Json(nullptr)},
               {"t_values", {0.25, 0.5, 0.75}},
               {"seed", seed}});
  summary_out << "LOG  homotopy_stays_in_X " << total.homotopy_inside << "/" << total.homotopy_checked
              << '\n';

  // Degree check on the longest-interval coloring of K_{3,r}.
  const auto k = PartitionComplex::build(3, winding_r);
  const std::vector<VertexColoring> cs{apply_scheme(scheme_example2(ascending_tiebreak(3)), k)};
  const SizeVector m{{2}};
  Json winding_doc{{"property", "boundary_winding_longest_interval"}, {"asserted", true}, {"n", 3},
                   {"r", winding_r}};
  bool winding_pass = false;
  try {
    WindingOptions opts;
    opts.trace = cfg.contains("trace") && !cfg.at("trace").get<std::string>().empty();
    const auto res = boundary_winding(k, cs, m, opts);
    WindingOptions finer;
    finer.min_level = res.level + 1;
    const auto refined = boundary_winding(k, cs, m, finer);
    winding_pass = res.winding == 1 && refined.winding == 1;
    winding_doc["winding"] = res.winding;
    winding_doc["level"] = res.level;
    winding_doc["max_step"] = res.max_step;
    winding_doc["refined_winding"] = refined.winding;
    if (opts.trace) {
      Json trace_cfg = cfg;
      trace_cfg["trace_of"] = "boundary_winding_longest_interval";
      ReportWriter tw(cfg.at("trace").get<std::string>(), out, trace_cfg);
      for (const auto& [t, angle] : res.trace) tw.write(Json{{"t", t}, {"angle", angle}});
    }
  } catch (const BoundarySolutionFound& e) {
    Json face = Json::array();
    for (VertexId v : e.face) face.push_back(to_json(k.partition(v)));
    winding_doc["boundary_solution"] = face;
  }
  winding_doc["pass"] = winding_pass;
  if (!winding_pass) failed.emplace_back("boundary_winding_longest_interval");
  w.write(winding_doc);
  summary_out << (winding_pass ? "PASS " : "FAIL ") << "boundary_winding_longest_interval r=" << winding_r
              << '\n';

  w.write(Json{{"summary", {{"pass", failed.empty()}, {"failed", failed}}}});
  return failed.empty() ? kOk : kPropertyFailure;
}

// ---------------------------------------------------------------- sweep

SweepGrid grid_of(const Json& cfg) {
  SweepGrid g;
  std::tie(g.n_min, g.n_max) = cfg.at("n").get<std::pair<int, int>>();
  std::tie(g.r_min, g.r_max) = cfg.at("r").get<std::pair<int, int>>();
  std::tie(g.colorings_min, g.colorings_max) = cfg.at("colorings").get<std::pair<int, int>>();
  g.families.clear();
  for (const auto& f : cfg.at("families")) g.families.push_back(parse_family(f.get<std::string>()));
  g.seeds = cfg.at("seeds");
  g.base_seed = cfg.at("seed");
  return g;
}

Json without_jobs(Json cfg) {
  cfg.erase("jobs");
  return cfg;
}

/// Reads an existing sweep log: checks the header, drops a torn final line
/// and returns the complete records.
std::vector<Json> load_existing(const std::string& path, const Json& cfg) {
  std::ifstream in(path, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const auto last_newline = text.rfind('\n');
  const std::size_t keep = last_newline == std::string::npos ? 0 : last_newline + 1;
  if (keep != text.size()) {
    spdlog::warn("dropping a torn final line from {}", path);
    fs::resize_file(path, keep);
    text.resize(keep);
  }
  std::vector<Json> lines;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) lines.push_back(Json::parse(line));
  if (lines.size() < 2 || !lines[0].contains("run_config")) {
    throw UsageError("'" + path + "' is not a sweep log");
  }
  if (without_jobs(lines[0].at("run_config")) != without_jobs(cfg)) {
    throw UsageError("'" + path + "' was written by a different sweep configuration");
  }
  return {lines.begin() + 2, lines.end()};
}

int cmd_sweep(const Json& cfg, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (out_path.empty()) throw UsageError("sweep needs --out for its append-only log");
  const auto grid = grid_of(cfg);
  const unsigned jobs = cfg.at("jobs");
  const auto instances = enumerate_instances(grid);

  std::vector<Json> done;
  const bool resume = fs::exists(out_path) && fs::file_size(out_path) > 0;
  if (resume) done = load_existing(out_path, cfg);
  for (std::size_t i = 0; i < done.size(); ++i) {
    if (done[i].at("instance").get<std::size_t>() != i) {
      throw UsageError("sweep log records are out of order");
    }
  }
  if (done.size() > instances.size()) throw UsageError("sweep log has more records than the grid");
  if (resume) spdlog::info("resuming sweep at instance {} of {}", done.size(), instances.size());

  ReportWriter w(out_path, out, cfg, resume);
  std::size_t candidates = 0;
  std::vector<std::size_t> candidate_ids;
  for (const auto& rec : done) {
    if (rec.at("candidate").get<bool>()) candidate_ids.push_back(rec.at("instance"));
  }

  const std::size_t batch = std::max<std::size_t>(1, jobs) * 8;
  struct Slot {
    std::optional<SweepRecord> record;
    std::optional<NoSolution> failure;
  };
  for (std::size_t start = done.size(); start < instances.size(); start += batch) {
    const std::size_t count = std::min(batch, instances.size() - start);
    std::vector<Slot> slots(count);
    parallel_for(count, jobs, [&](std::size_t j) {
      try {
        slots[j].record = evaluate_instance(instances[start + j]);
      } catch (const NoSolution& e) {
        slots[j].failure = e;
      }
    });
    for (std::size_t j = 0; j < count; ++j) {
      if (slots[j].failure) {
        const auto& inst = instances[start + j];
        Json bundle = no_solution_bundle(*slots[j].failure, instance_specs(inst));
        bundle["instance"] = inst.index;
        bundle["family"] = to_string(inst.family);
        bundle["seed"] = inst.seed;
        ReportWriter bw(out_path + ".violation.json", out, cfg);
        bw.write(bundle);
        summary_stream(out_path, out, err) << "NO SOLUTION at instance " << inst.index
                                           << ": bundle written to " << out_path << ".violation.json\n";
        return kNoSolution;
      }
      const auto& rec = *slots[j].record;
      if (rec.candidate) candidate_ids.push_back(rec.instance.index);
      w.write(to_json(rec));
    }
    spdlog::debug("sweep progress {}/{}", start + count, instances.size());
  }
  candidates = candidate_ids.size();

  Json summary = {{"instances", instances.size()},
                  {"resumed_from", done.size()},
                  {"candidates", candidates},
                  {"candidate_instances", candidate_ids},
                  {"interpretation", kInterpretation}};
  std::ofstream(out_path + ".summary.json") << Json{{"run_config", cfg}, {"summary", summary}}.dump(2) << '\n';
  summary_stream(out_path, out, err) << instances.size() << " instances, " << candidates
                                     << " counterexample candidates\n";
  return kOk;
}

}  // namespace

int execute(const Json& config, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto command = config.at("command").get<std::string>();
  if (command == "build") return cmd_build(config, out_path, out, err);
  if (command == "solve") return cmd_solve(config, out_path, out, err);
  if (command == "verify-maps") return cmd_verify_maps(config, out_path, out, err);
  if (command == "sweep") return cmd_sweep(config, out_path, out, err);
  throw UsageError("unknown command '" + command + "'");
}

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::vector<std::string> original;
  for (std::string line; std::getline(in, line);) original.push_back(line);
  if (original.empty()) throw UsageError("'" + path + "' is empty");
  const Json header = Json::parse(original.front());
  if (!header.contains("run_config")) throw UsageError("'" + path + "' has no run_config header");

  const std::string rerun_path = path + ".replay";
  fs::remove(rerun_path);
  std::ostringstream sink;
  const int code = execute(header.at("run_config"), rerun_path, sink, sink);
  std::vector<std::string> rerun;
  {
    std::ifstream again(rerun_path);
    for (std::string line; std::getline(again, line);) rerun.push_back(line);
  }
  fs::remove(rerun_path);
  fs::remove(rerun_path + ".summary.json");
  fs::remove(rerun_path + ".violation.json");

  // Line 2 holds the timestamp.
  std::size_t mismatch = 0;
  std::optional<std::size_t> first;
  const std::size_t lines = std::max(original.size(), rerun.size());
  for (std::size_t i = 0; i < lines; ++i) {
    if (i == 1) continue;
    const bool same = i < original.size() && i < rerun.size() && original[i] == rerun[i];
    if (!same) {
      ++mismatch;
      if (!first) first = i;
    }
  }
  if (mismatch == 0) {
    out << "replay identical: " << original.size() << " lines (exit " << code << ")\n";
    return kOk;
  }
  err << "replay differs on " << mismatch << " lines, first at line " << *first + 1 << '\n';
  return kPropertyFailure;
}

}  // namespace sperner::lab
