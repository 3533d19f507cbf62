#pragma once

// Command layer of sperner-lab. A run is fully described by its RunConfig,
// a JSON object with a "command" key; every output file starts with
//
//   {"run_config": {...}}
//   {"timestamp": "..."}      (ignored by replay)
//
// followed by one JSON record per line.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/coloring.hpp"
#include "sperner/io.hpp"

namespace sperner::lab {

enum ExitCode : int { kOk = 0, kUsage = 1, kPropertyFailure = 2, kNoSolution = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses argv-style arguments (without the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs a RunConfig. Records go to `out_path`, or to `out` when it is empty.
int execute(const Json& config, const std::string& out_path, std::ostream& out, std::ostream& err);

/// Reruns the config stored in `path` and compares the bytes of every line
/// but the timestamp.
int replay(const std::string& path, std::ostream& out, std::ostream& err);

/// Scheme descriptors: longest | example2 | ranked:<r1,r2,..> | example3[:i]
/// | example4[:c1|c2|c3] | random[:seed]. example3 and example4 without a
/// selector expand to all three colorings. Unseeded random colorings take
/// derive_seed(seed, position).
std::vector<ColoringSpec> resolve_schemes(const std::vector<std::string>& descriptors, int n,
                                          const Tiebreak& tiebreak, std::uint64_t seed);

/// "1,2,3" -> {1,2,3}; "random" draws a permutation of [1,n] from the seed.
Tiebreak parse_tiebreak(const std::string& text, int n, std::uint64_t seed);

std::vector<int> parse_int_list(const std::string& text);

/// "a" or "a:b" -> closed range.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace sperner::lab
