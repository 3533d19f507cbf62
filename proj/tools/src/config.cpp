#include <charconv>
#include <string_view>

#include "sperner/random.hpp"
#include "sperner_lab/lab.hpp"

namespace sperner::lab {
namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("not a seed: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_int(std::string_view(text).substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(std::string_view(text).substr(0, colon));
  const int hi = parse_int(std::string_view(text).substr(colon + 1));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

Tiebreak parse_tiebreak(const std::string& text, int n, std::uint64_t seed) {
  if (text.empty()) return ascending_tiebreak(n);
  if (text == "random") {
    SplitMix64 rng(derive_seed(seed, 0x7462));
    return random_permutation(rng, n);
  }
  Tiebreak tb = parse_int_list(text);
  try {
    check_tiebreak(tb, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return tb;
}

std::vector<ColoringSpec> resolve_schemes(const std::vector<std::string>& descriptors, int n,
                                          const Tiebreak& tiebreak, std::uint64_t seed) {
  std::vector<ColoringSpec> out;
  auto need_four = [&](const std::string& d) {
    if (n != 4) throw UsageError("scheme '" + d + "' needs n = 4");
  };
  for (const auto& d : descriptors) {
    const auto colon = d.find(':');
    const std::string head = d.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : d.substr(colon + 1);
    try {
      if (head == "longest" || head == "example2") {
        out.push_back(as_spec(scheme_example2(tiebreak)));
      } else if (head == "ranked") {
        if (arg.empty()) throw UsageError("ranked needs a rank list, e.g. ranked:1,3");
        out.push_back(RankedScheme{parse_int_list(arg), tiebreak});
      } else if (head == "example3") {
        need_four(d);
        if (arg.empty()) {
          for (int i = 1; i <= 3; ++i) out.push_back(as_spec(scheme_example3(i, tiebreak)));
        } else {
          out.push_back(as_spec(scheme_example3(parse_int(arg), tiebreak)));
        }
      } else if (head == "example4") {
        need_four(d);
        const std::vector<std::pair<std::string, Example4>> which{
            {"c1", Example4::c1}, {"c2", Example4::c2}, {"c3", Example4::c3}};
        bool matched = arg.empty();
        for (const auto& [name, w] : which) {
          if (arg.empty() || arg == name) {
            out.push_back(as_spec(scheme_example4(w, tiebreak)));
            matched = true;
          }
        }
        if (!matched) throw UsageError("example4 selector must be c1, c2 or c3");
      } else if (head == "random") {
        out.push_back(RandomColoring{arg.empty() ? derive_seed(seed, out.size()) : parse_u64(arg)});
      } else {
        throw UsageError("unknown scheme '" + d + "'");
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError("scheme '" + d + "': " + e.what());
    }
  }
  for (const auto& spec : out) {
    if (const auto* ranked = std::get_if<RankedScheme>(&spec)) {
      for (Color c : ranked->ranks) {
        if (c < 1 || c > n) throw UsageError("rank out of range in a ranked scheme");
      }
    }
  }
  return out;
}

}  // namespace sperner::lab
