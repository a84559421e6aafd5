#pragma once

// JSON interchange formats and DOT rendering.
//
//   graph:    {"format_version": 1, "tree_edges": [[id, id], ...], "cycle": [id, ...]}
//   coloring: {"format_version": 1, "schedule": [s_1, ...], "colors": {id: class, ...}}
//
// Ids may be strings or integers; integer ids and their decimal strings name
// the same vertex.

#include <string>

#include <json.hpp>

#include "halin/constructive.hpp"
#include "halin/graph.hpp"
#include "halin/solver.hpp"

namespace halin::io {

inline constexpr int kFormatVersion = 1;

nlohmann::json graph_to_json(const HalinGraph& h);
/// Throws ParseError on schema problems; build_halin errors propagate as is.
HalinGraph graph_from_json(const nlohmann::json& doc);

struct ColoringDocument {
  SPacking schedule;
  Coloring coloring;
};

nlohmann::json coloring_to_json(const HalinGraph& h, const SPacking& schedule,
                                const Coloring& coloring);
/// Vertices absent from "colors" stay unassigned. Throws ParseError on schema
/// problems and InvalidInput on ids that are not vertices of h.
ColoringDocument coloring_from_json(const nlohmann::json& doc, const HalinGraph& h);

nlohmann::json diagnostics_to_json(const HalinGraph& h, const ColoringDiagnostics& diag);
nlohmann::json report_to_json(const HalinGraph& h, const VerificationReport& report);
nlohmann::json solve_result_to_json(const HalinGraph& h, const SPacking& schedule,
                                    const SolveResult& result);

/// Class display names: a lone class prints as its s value, the pair of 1s
/// in (1, 1, ...) as 1 and 1', any other run of equal values as s_a, s_b, ...
std::string class_label(const SPacking& schedule, int cls);

/// Graphviz rendering: tree edges solid, cycle edges bold and dashed; with a
/// coloring, vertices are labeled "name:class".
std::string to_dot(const HalinGraph& h, const SPacking* schedule = nullptr,
                   const Coloring* coloring = nullptr);

}  // namespace halin::io
