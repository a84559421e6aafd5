#include "halin/io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace halin::io {

using nlohmann::json;

namespace {

bool is_canonical_integer(const std::string& s) {
  if (s.empty() || s.size() > 9) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  return std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

json id_to_json(const std::string& name) {
  if (is_canonical_integer(name)) return std::stoi(name);
  return name;
}

std::string id_from_json(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw Error(ErrorCode::ParseError, "vertex ids must be strings or integers");
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

}  // namespace

json graph_to_json(const HalinGraph& h) {
  json edges = json::array();
  for (auto [u, v] : h.tree_edges()) edges.push_back({id_to_json(h.name(u)), id_to_json(h.name(v))});
  json cycle = json::array();
  for (Vertex v : h.cycle()) cycle.push_back(id_to_json(h.name(v)));
  return {{"format_version", kFormatVersion}, {"tree_edges", edges}, {"cycle", cycle}};
}

HalinGraph graph_from_json(const json& doc) {
  const json& edges = require(doc, "tree_edges");
  const json& cycle = require(doc, "cycle");
  if (!edges.is_array() || !cycle.is_array()) {
    throw Error(ErrorCode::ParseError, "tree_edges and cycle must be arrays");
  }
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edges are [id, id] pairs");
    named.emplace_back(id_from_json(e[0]), id_from_json(e[1]));
  }
  std::vector<std::string> order;
  for (const auto& v : cycle) order.push_back(id_from_json(v));
  return build_halin(named, order);
}

json coloring_to_json(const HalinGraph& h, const SPacking& schedule, const Coloring& coloring) {
  json colors = json::object();
  for (Vertex v = 0; v < coloring.size(); ++v) {
    if (coloring[v] != Coloring::kUnassigned) colors[h.name(v)] = coloring[v];
  }
  return {{"format_version", kFormatVersion}, {"schedule", schedule.values()}, {"colors", colors}};
}

ColoringDocument coloring_from_json(const json& doc, const HalinGraph& h) {
  const json& schedule = require(doc, "schedule");
  const json& colors = require(doc, "colors");
  if (!schedule.is_array() || !colors.is_object()) {
    throw Error(ErrorCode::ParseError, "schedule must be an array and colors an object");
  }
  std::vector<int> values;
  for (const auto& s : schedule) {
    if (!s.is_number_integer()) throw Error(ErrorCode::ParseError, "schedule entries are integers");
    values.push_back(s.get<int>());
  }
  std::unordered_map<std::string, Vertex> ids;
  for (Vertex v = 0; v < h.order(); ++v) ids.emplace(h.name(v), v);

  Coloring coloring(h.order());
  for (const auto& [key, value] : colors.items()) {
    auto it = ids.find(key);
    if (it == ids.end()) throw Error(ErrorCode::InvalidInput, "no vertex named '" + key + "'");
    if (!value.is_number_integer()) throw Error(ErrorCode::ParseError, "classes are integers");
    coloring[it->second] = value.get<int>();
  }
  return {SPacking(std::move(values)), std::move(coloring)};
}

json diagnostics_to_json(const HalinGraph& h, const ColoringDiagnostics& diag) {
  json conflicts = json::array();
  for (const auto& c : diag.conflicts) {
    json resolution = json::array();
    for (auto r : c.resolution) resolution.push_back(std::string(to_string(r)));
    conflicts.push_back({{"kind", std::string(to_string(c.kind))},
                         {"x", id_to_json(h.name(c.x))},
                         {"y", c.y ? id_to_json(h.name(*c.y)) : json(nullptr)},
                         {"a_i", id_to_json(h.name(c.a_i))},
                         {"a_j", id_to_json(h.name(c.a_j))},
                         {"resolution", resolution},
                         {"mirrored", c.mirrored}});
  }
  return {{"case", diag.case_taken ? json(std::string(to_string(*diag.case_taken))) : json(nullptr)},
          {"n_mod_4", diag.n_mod_4},
          {"conflicts", conflicts},
          {"fallback_used", diag.fallback_used},
          {"notes", diag.notes}};
}

json report_to_json(const HalinGraph& h, const VerificationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"u", id_to_json(h.name(v.u))},
                          {"v", id_to_json(h.name(v.v))},
                          {"class", v.cls},
                          {"distance", v.distance}});
  }
  return {{"format_version", kFormatVersion}, {"valid", report.valid}, {"violations", violations}};
}

json solve_result_to_json(const HalinGraph& h, const SPacking& schedule, const SolveResult& result) {
  json doc{{"format_version", kFormatVersion},
           {"schedule", schedule.values()},
           {"status", std::string(to_string(result.status))},
           {"nodes_explored", result.nodes_explored},
           {"elapsed_ms", static_cast<double>(result.elapsed.count()) / 1000.0}};
  if (result.coloring) doc["colors"] = coloring_to_json(h, schedule, *result.coloring)["colors"];
  return doc;
}

std::string class_label(const SPacking& schedule, int cls) {
  const int s = schedule.s(cls);
  int first = cls;
  while (first > 1 && schedule.s(first - 1) == s) --first;
  int last = cls;
  while (last < schedule.size() && schedule.s(last + 1) == s) ++last;
  const int run = last - first + 1;
  if (run == 1) return std::to_string(s);
  if (s == 1 && run == 2) return cls == first ? "1" : "1'";
  return std::to_string(s) + "_" + static_cast<char>('a' + (cls - first));
}

std::string to_dot(const HalinGraph& h, const SPacking* schedule, const Coloring* coloring) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph halin {\n";
  for (Vertex v = 0; v < h.order(); ++v) {
    out << "  " << quoted(h.name(v));
    std::string label = h.name(v);
    if (schedule && coloring && (*coloring)[v] != Coloring::kUnassigned) {
      label += ":" + class_label(*schedule, (*coloring)[v]);
    }
    out << " [label=" << quoted(label) << (h.is_leaf(v) ? ", shape=circle" : ", shape=box")
        << "];\n";
  }
  for (auto [u, v] : h.tree_edges()) {
    out << "  " << quoted(h.name(u)) << " -- " << quoted(h.name(v)) << " [style=solid];\n";
  }
  for (int i = 0; i < h.cycle_length(); ++i) {
    out << "  " << quoted(h.name(h.cycle_at(i))) << " -- " << quoted(h.name(h.cycle_at(i + 1)))
        << " [style=\"bold,dashed\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace halin::io
