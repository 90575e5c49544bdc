#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hasse/analysis.hpp"
#include "hasse/geometry.hpp"
#include "hasse/hasse_graph.hpp"
#include "hasse/patterns.hpp"
#include "hasse/sparsify.hpp"

namespace hasse {

// {"points": [[x,y],...], "lines": [[a,b],...], "incidences": [[pi,li],...]},
// arrays in canonical order.
nlohmann::json to_json(const IncidenceStructure& s);

// Parses and validates; rejects non-canonical or inconsistent files.
IncidenceStructure structure_from_json(const nlohmann::json& j);

// {"n": n, "edges": [[u,v],...]} plus "labels" when present.
nlohmann::json to_json(const OrderedGraph& g);

nlohmann::json to_json(const AnalysisReport& rep);
nlohmann::json to_json(const SparsifyReport& rep);
nlohmann::json to_json(const GridWitness& w);
nlohmann::json to_json(const FanWitness& w);
nlohmann::json to_json(const PatternFreeReport& rep);

// Sorted keys, two-space indent, trailing newline: byte-stable output.
std::string canonical_dump(const nlohmann::json& j);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace hasse
