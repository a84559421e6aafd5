#include "halin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <unordered_map>

namespace halin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::CycleMismatch: return "CycleMismatch";
    case ErrorCode::NonPlanarOrder: return "NonPlanarOrder";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotOnCycle: return "NotOnCycle";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::ClassOutOfRange: return "ClassOutOfRange";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadTree: return "BadTree";
    case ErrorCode::FallbackExhausted: return "FallbackExhausted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// GenericGraph

GenericGraph::GenericGraph(int vertex_count) : adjacency_(vertex_count) {}

GenericGraph GenericGraph::from_edges(int vertex_count, std::span<const Edge> edges) {
  GenericGraph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void GenericGraph::add_edge(Vertex u, Vertex v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw Error(ErrorCode::InvalidInput,
                "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

bool GenericGraph::has_edge(Vertex u, Vertex v) const {
  const auto& nu = adjacency_[u];
  return std::find(nu.begin(), nu.end(), v) != nu.end();
}

std::vector<Edge> GenericGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool GenericGraph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// HalinGraph

Vertex HalinGraph::cycle_at(int position) const {
  const int n = cycle_length();
  return cycle_[((position % n) + n) % n];
}

std::vector<Vertex> HalinGraph::internal_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (!is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> HalinGraph::leaf_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w : tree_adjacency_[v]) {
    if (is_leaf(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [&](Vertex a, Vertex b) { return cycle_position_[a] < cycle_position_[b]; });
  return out;
}

namespace {

// A set of cycle positions forms one circular arc iff it has exactly one gap.
bool is_circular_arc(const std::vector<int>& sorted_positions, int n) {
  const auto m = sorted_positions.size();
  if (m == 0 || static_cast<int>(m) == n) return true;
  int gaps = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (sorted_positions[i + 1] - sorted_positions[i] > 1) ++gaps;
  }
  if (sorted_positions.front() + n - sorted_positions.back() > 1) ++gaps;
  return gaps == 1;
}

}  // namespace

HalinGraph build_halin(std::span<const std::pair<std::string, std::string>> tree_edges,
                       std::span<const std::string> cycle_order) {
  if (tree_edges.empty()) throw Error(ErrorCode::NotATree, "tree has no edges");

  HalinGraph h;
  std::unordered_map<std::string, Vertex> ids;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<Vertex>(h.names_.size()));
    if (inserted) h.names_.push_back(name);
    return it->second;
  };
  for (const auto& [a, b] : tree_edges) {
    Vertex u = intern(a);
    Vertex v = intern(b);
    h.tree_edges_.emplace_back(u, v);
  }
  const int order = h.order();

  GenericGraph tree(order);
  for (auto [u, v] : h.tree_edges_) {
    if (u == v) throw Error(ErrorCode::NotATree, "self-loop at " + h.names_[u]);
    if (tree.has_edge(u, v)) {
      throw Error(ErrorCode::NotATree, "repeated edge " + h.names_[u] + "-" + h.names_[v]);
    }
    tree.add_edge(u, v);
  }
  if (tree.edge_count() != order - 1 || !tree.is_connected()) {
    throw Error(ErrorCode::NotATree, "tree edges contain a cycle or are disconnected");
  }
  if (order < 4) throw Error(ErrorCode::OrderTooSmall, "tree order " + std::to_string(order));

  h.tree_adjacency_.resize(order);
  for (Vertex v = 0; v < order; ++v) {
    h.tree_adjacency_[v] = tree.neighbors(v);
    const int d = tree.degree(v);
    if (d != 1 && d != 3) {
      throw Error(ErrorCode::BadDegree,
                  "vertex " + h.names_[v] + " has tree degree " + std::to_string(d));
    }
  }

  h.cycle_position_.assign(order, -1);
  for (const auto& name : cycle_order) {
    auto it = ids.find(name);
    if (it == ids.end()) throw Error(ErrorCode::CycleMismatch, "unknown cycle vertex " + name);
    Vertex v = it->second;
    if (tree.degree(v) != 1) throw Error(ErrorCode::CycleMismatch, name + " is not a leaf");
    if (h.cycle_position_[v] >= 0) throw Error(ErrorCode::CycleMismatch, name + " repeated");
    h.cycle_position_[v] = static_cast<int>(h.cycle_.size());
    h.cycle_.push_back(v);
  }
  for (Vertex v = 0; v < order; ++v) {
    if (tree.degree(v) == 1 && h.cycle_position_[v] < 0) {
      throw Error(ErrorCode::CycleMismatch, "leaf " + h.names_[v] + " missing from cycle");
    }
  }

  // Contiguity: the leaves below every tree edge occupy one circular arc.
  const int n = h.cycle_length();
  std::vector<Vertex> parent(order, -1);
  std::vector<Vertex> preorder;
  preorder.reserve(order);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    preorder.push_back(u);
    for (Vertex w : h.tree_adjacency_[u]) {
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<int>> below(order);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    Vertex u = *it;
    auto& mine = below[u];
    if (h.cycle_position_[u] >= 0) mine.push_back(h.cycle_position_[u]);
    std::sort(mine.begin(), mine.end());
    if (u != 0) {
      if (!is_circular_arc(mine, n)) {
        throw Error(ErrorCode::NonPlanarOrder, "leaves below edge " + h.names_[parent[u]] + "-" +
                                                   h.names_[u] + " are not contiguous on the cycle");
      }
      auto& up = below[parent[u]];
      up.insert(up.end(), mine.begin(), mine.end());
      std::vector<int>().swap(mine);
    }
  }
  return h;
}

HalinGraph build_halin(std::span<const Edge> tree_edges, std::span<const Vertex> cycle_order) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(tree_edges.size());
  for (auto [u, v] : tree_edges) named.emplace_back(std::to_string(u), std::to_string(v));
  std::vector<std::string> cycle;
  cycle.reserve(cycle_order.size());
  for (Vertex v : cycle_order) cycle.push_back(std::to_string(v));
  return build_halin(named, cycle);
}

GenericGraph full_graph(const HalinGraph& h) {
  GenericGraph g = tree_graph(h);
  const int n = h.cycle_length();
  for (int i = 0; i < n; ++i) g.add_edge(h.cycle_at(i), h.cycle_at(i + 1));
  return g;
}

GenericGraph tree_graph(const HalinGraph& h) {
  return GenericGraph::from_edges(h.order(), h.tree_edges());
}

int cycle_distance(const HalinGraph& h, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= h.order() || v >= h.order() || !h.is_leaf(u) || !h.is_leaf(v)) {
    throw Error(ErrorCode::NotOnCycle, "cycle distance needs two cycle vertices");
  }
  const int n = h.cycle_length();
  const int forward = ((h.cycle_position(v) - h.cycle_position(u)) % n + n) % n;
  return std::min(forward, n - forward);
}

std::vector<Vertex> tree_side(const HalinGraph& h, Vertex from, Vertex blocked) {
  std::vector<Vertex> out{from};
  std::vector<std::pair<Vertex, Vertex>> stack{{from, blocked}};
  while (!stack.empty()) {
    auto [u, came_from] = stack.back();
    stack.pop_back();
    for (Vertex w : h.tree_neighbors(u)) {
      if (w == came_from) continue;
      out.push_back(w);
      stack.emplace_back(w, u);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SPacking

SPacking::SPacking(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidSchedule, "empty schedule");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) throw Error(ErrorCode::InvalidSchedule, "entries must be positive");
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw Error(ErrorCode::InvalidSchedule, "schedule must be non-decreasing");
    }
  }
}

SPacking SPacking::parse(std::string_view text) {
  if (text == "1123") return SPacking({1, 1, 2, 3});
  if (text == "122222") return SPacking({1, 2, 2, 2, 2, 2});
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('-', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidSchedule, "cannot parse schedule '" + std::string(text) + "'");
    }
    values.push_back(value);
    start = end + 1;
  }
  return SPacking(std::move(values));
}

std::string SPacking::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(values_[i]);
  }
  return out;
}

bool Coloring::is_total() const {
  return std::none_of(classes_.begin(), classes_.end(),
                      [](int c) { return c == kUnassigned; });
}

// ---------------------------------------------------------------------------
// Distances and verification

DistanceOracle all_pairs_distances(const GenericGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices || n > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::OracleTooLarge,
                std::to_string(n) + " vertices exceeds the cap of " + std::to_string(max_vertices));
  }
  DistanceOracle oracle;
  oracle.n_ = n;
  constexpr auto kUnseen = std::numeric_limits<std::uint16_t>::max();
  oracle.dist_.assign(static_cast<std::size_t>(n) * n, kUnseen);
  std::vector<Vertex> queue(n);
  for (Vertex source = 0; source < n; ++source) {
    std::uint16_t* row = oracle.dist_.data() + static_cast<std::size_t>(source) * n;
    row[source] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == kUnseen) {
          row[w] = static_cast<std::uint16_t>(row[u] + 1);
          queue[tail++] = w;
        }
      }
    }
    if (static_cast<int>(tail) != n) {
      throw Error(ErrorCode::Disconnected,
                  "vertex " + std::to_string(source) + " does not reach every vertex");
    }
  }
  return oracle;
}

VerificationReport verify_packing(const GenericGraph& g, const SPacking& schedule,
                                  const Coloring& coloring, const DistanceOracle& oracle) {
  const int n = g.vertex_count();
  if (coloring.size() != n || oracle.size() != n) {
    throw Error(ErrorCode::InvalidInput, "coloring or oracle size does not match the graph");
  }
  const int k = schedule.size();
  std::vector<std::vector<Vertex>> members(k + 1);
  for (Vertex v = 0; v < n; ++v) {
    const int c = coloring[v];
    if (c == Coloring::kUnassigned) {
      throw Error(ErrorCode::PartialColoring, "vertex " + std::to_string(v) + " is uncolored");
    }
    if (c < 1 || c > k) {
      throw Error(ErrorCode::ClassOutOfRange,
                  "class " + std::to_string(c) + " outside 1.." + std::to_string(k));
    }
    members[c].push_back(v);
  }
  VerificationReport report;
  for (int c = 1; c <= k; ++c) {
    const auto& vs = members[c];
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const int d = oracle(vs[a], vs[b]);
        if (d <= schedule.s(c)) report.violations.push_back({vs[a], vs[b], c, d});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

VerificationReport verify_packing(const GenericGraph& g, const SPacking& schedule,
                                  const Coloring& coloring) {
  return verify_packing(g, schedule, coloring, all_pairs_distances(g));
}

// ---------------------------------------------------------------------------
// Subdivision

GenericGraph subdivide(const GenericGraph& g) {
  const auto edges = g.edges();
  const int n = g.vertex_count();
  GenericGraph out(n + static_cast<int>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Vertex mid = n + static_cast<Vertex>(e);
    out.add_edge(edges[e].first, mid);
    out.add_edge(mid, edges[e].second);
  }
  return out;
}

LiftedColoring lift_coloring(const Coloring& coloring, const SPacking& schedule,
                             const GenericGraph& g) {
  VerificationReport report;
  try {
    report = verify_packing(g, schedule, coloring);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("cannot lift: ") + e.what());
  }
  if (!report.valid) throw Error(ErrorCode::InvalidInput, "cannot lift an invalid coloring");

  std::vector<int> lifted_values{1};
  for (int s : schedule.values()) lifted_values.push_back(2 * s + 1);

  const int n = g.vertex_count();
  Coloring lifted(n + g.edge_count());
  for (Vertex v = 0; v < n; ++v) lifted[v] = coloring[v] + 1;
  for (Vertex m = n; m < lifted.size(); ++m) lifted[m] = 1;
  return {std::move(lifted), SPacking(std::move(lifted_values))};
}

}  // namespace halin
