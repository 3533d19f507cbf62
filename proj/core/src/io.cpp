#include "sperner/io.hpp"

#include <map>
#include <stdexcept>

namespace sperner {
namespace {

Json face_names(const Complex& k, const Face& f) {
  Json arr = Json::array();
  for (VertexId v : f) arr.push_back(k.name(v));
  return arr;
}

}  // namespace

Json to_json(const Complex& k) {
  Json doc;
  doc["vertices"] = k.vertex_names();
  Json faces = Json::array();
  for (const auto& f : k.faces()) faces.push_back(face_names(k, f));
  doc["faces"] = std::move(faces);
  return doc;
}

Complex complex_from_json(const Json& doc) {
  auto names = doc.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, VertexId> ids;
  for (VertexId v = 0; v < names.size(); ++v) ids[names[v]] = v;
  std::vector<Face> faces;
  for (const auto& f : doc.at("faces")) {
    std::vector<VertexId> face;
    for (const auto& name : f) {
      const auto it = ids.find(name.get<std::string>());
      if (it == ids.end()) throw SimplicialError("face names an unknown vertex");
      face.push_back(it->second);
    }
    const Face sorted = make_face(face);
    if (sorted.size() != face.size()) throw SimplicialError("face repeats a vertex");
    faces.push_back(sorted);
  }
  return Complex::validate(std::move(names), std::move(faces));
}

Json to_json(const VertexMap& c) {
  Json assignment = Json::object();
  for (VertexId v = 0; v < c.assignment().size(); ++v) {
    assignment[c.source()->name(v)] = c.target()->name(c(v));
  }
  return Json{{"assignment", std::move(assignment)}};
}

VertexMap vertex_map_from_json(const Json& doc, ComplexPtr source, ComplexPtr target) {
  const auto& assignment = doc.at("assignment");
  std::vector<VertexId> out(source->vertex_count());
  if (assignment.size() != out.size()) throw SimplicialError("assignment is not total");
  for (const auto& [from, to] : assignment.items()) {
    const auto u = source->find_vertex(from);
    const auto w = target->find_vertex(to.get<std::string>());
    if (!u || !w) throw SimplicialError("assignment names an unknown vertex");
    out[*u] = *w;
  }
  return VertexMap(std::move(source), std::move(target), std::move(out));
}

Json to_json(const Partition& p) { return p.cuts(); }

Partition partition_from_json(const Json& doc) { return Partition(doc.get<std::vector<int>>()); }

Json to_json(const PartitionComplex& k) {
  Json doc;
  doc["n"] = k.n();
  doc["r"] = k.r();
  const Json body = to_json(*k.complex());
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

Json to_json(const ColoringSpec& spec) {
  if (const auto* ranked = std::get_if<RankedScheme>(&spec)) {
    return Json{{"kind", "ranked"}, {"ranks", ranked->ranks}, {"tiebreak", ranked->tiebreak}};
  }
  if (const auto* longest = std::get_if<LongestScheme>(&spec)) {
    return Json{{"kind", "longest"}, {"tiebreak", longest->tiebreak}};
  }
  return Json{{"kind", "random"}, {"seed", std::get<RandomColoring>(spec).seed}};
}

ColoringSpec coloring_spec_from_json(const Json& doc) {
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == "ranked") {
    return RankedScheme{doc.at("ranks").get<std::vector<Color>>(),
                        doc.at("tiebreak").get<Tiebreak>()};
  }
  if (kind == "longest") return LongestScheme{doc.at("tiebreak").get<Tiebreak>()};
  if (kind == "random") return RandomColoring{doc.at("seed").get<std::uint64_t>()};
  throw std::invalid_argument("unknown scheme kind '" + kind + "'");
}

Tiebreak spec_tiebreak(const ColoringSpec& spec) {
  if (const auto* ranked = std::get_if<RankedScheme>(&spec)) return ranked->tiebreak;
  if (const auto* longest = std::get_if<LongestScheme>(&spec)) return longest->tiebreak;
  return {};
}

Json to_json(const NonnegGrid& g) {
  return Json{{"N", g.color_count()}, {"I", g.index_count()}, {"values", g.values()}};
}

NonnegGrid grid_from_json(const Json& doc) {
  return NonnegGrid(doc.at("N").get<std::size_t>(), doc.at("I").get<std::size_t>(),
                    doc.at("values").get<std::vector<double>>());
}

Json to_json(const ColorSet& s) { return s.to_vector(); }

Json to_json(const SolutionReport& rep, const PartitionComplex& k) {
  Json doc;
  Json parts = Json::array();
  for (VertexId v : rep.face) parts.push_back(to_json(k.partition(v)));
  doc["face"] = std::move(parts);
  Json sets = Json::array();
  for (const auto& s : rep.color_sets) sets.push_back(to_json(s));
  doc["color_sets"] = std::move(sets);
  doc["size_solution"] = rep.size_solution;
  doc["full_solution"] = rep.full_solution;
  doc["connected"] = rep.connected;
  doc["isolated_colors"] = has_isolated_colors(rep.hypergraph);
  doc["shape"] = to_string(rep.shape);
  doc["minimal"] = rep.minimal;
  return doc;
}

Json to_json(const SweepRecord& rec) {
  const auto& inst = rec.instance;
  Json schemes = Json::array();
  Json tiebreaks = Json::array();
  for (const auto& s : rec.specs) {
    schemes.push_back(to_json(s));
    tiebreaks.push_back(spec_tiebreak(s));
  }
  Json doc;
  doc["n"] = inst.n;
  doc["r"] = inst.r;
  doc["m"] = inst.m.m;
  doc["schemes"] = std::move(schemes);
  doc["tiebreaks"] = std::move(tiebreaks);
  doc["seed"] = inst.seed;
  doc["full_solutions"] = rec.full_solutions;
  doc["connected_exists"] = rec.connected_exists;
  doc["candidate"] = rec.candidate;
  doc["instance"] = inst.index;
  doc["family"] = to_string(inst.family);
  doc["size_solutions"] = rec.size_solutions;
  return doc;
}

Json no_solution_bundle(const NoSolution& e, const std::vector<ColoringSpec>& specs) {
  Json doc;
  doc["theorem_violation"] = true;
  doc["n"] = e.n;
  doc["r"] = e.r;
  doc["m"] = e.m.m;
  Json schemes = Json::array();
  Json tiebreaks = Json::array();
  for (const auto& s : specs) {
    schemes.push_back(to_json(s));
    tiebreaks.push_back(spec_tiebreak(s));
  }
  doc["schemes"] = std::move(schemes);
  doc["tiebreaks"] = std::move(tiebreaks);
  Json colorings = Json::array();
  for (const auto& c : e.colorings) colorings.push_back(c.labels);
  doc["colorings"] = std::move(colorings);
  return doc;
}

}  // namespace sperner
