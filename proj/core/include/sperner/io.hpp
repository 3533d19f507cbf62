#pragma once

// JSON documents for complexes, maps, partitions, coloring descriptors,
// grids, solution reports and sweep records. Keys keep insertion order so
// the written bytes are stable.

#include <nlohmann/json.hpp>

#include "sperner/coloring.hpp"
#include "sperner/partition_complex.hpp"
#include "sperner/simplicial.hpp"
#include "sperner/solver.hpp"
#include "sperner/sweep.hpp"
#include "sperner/topology.hpp"

namespace sperner {

using Json = nlohmann::ordered_json;

/// {"vertices":[names...], "faces":[[names...],...]}; faces in canonical
/// order, each listed in canonical vertex order (the order of "vertices").
Json to_json(const Complex& k);
/// Inverse of to_json(Complex). Throws SimplicialError / NotClosed.
Complex complex_from_json(const Json& doc);

/// {"assignment":{source name: target name, ...}}
Json to_json(const VertexMap& c);
VertexMap vertex_map_from_json(const Json& doc, ComplexPtr source, ComplexPtr target);

/// [0, p1, ..., r]
Json to_json(const Partition& p);
Partition partition_from_json(const Json& doc);

/// {"n":n, "r":r, "vertices":[...], "faces":[...]}
Json to_json(const PartitionComplex& k);

/// {"kind":"ranked","ranks":[...],"tiebreak":[...]},
/// {"kind":"longest","tiebreak":[...]} or {"kind":"random","seed":s}.
Json to_json(const ColoringSpec& spec);
ColoringSpec coloring_spec_from_json(const Json& doc);
/// Tiebreak of a spec, empty for random colorings.
Tiebreak spec_tiebreak(const ColoringSpec& spec);

/// {"N":colors, "I":indices, "values":[row-major by index]}
Json to_json(const NonnegGrid& g);
NonnegGrid grid_from_json(const Json& doc);

Json to_json(const ColorSet& s);
Json to_json(const SolutionReport& rep, const PartitionComplex& k);

/// One sweep log line.
Json to_json(const SweepRecord& rec);

/// Everything needed to reproduce a theorem violation.
Json no_solution_bundle(const NoSolution& e, const std::vector<ColoringSpec>& specs);

}  // namespace sperner
