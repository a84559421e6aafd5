#include "halin/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <string>

namespace halin {

// ---------------------------------------------------------------------------
// PlaneCubicTree

PlaneCubicTree PlaneCubicTree::from_children(const std::vector<std::vector<Vertex>>& children,
                                             Vertex root) {
  const int n = static_cast<int>(children.size());
  if (root < 0 || root >= n) throw Error(ErrorCode::BadTree, "root out of range");

  std::vector<Vertex> relabel(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (relabel[u] >= 0) throw Error(ErrorCode::BadTree, "vertex reached twice");
    relabel[u] = static_cast<Vertex>(order.size());
    order.push_back(u);
    const auto& kids = children[u];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it < 0 || *it >= n) throw Error(ErrorCode::BadTree, "child out of range");
      stack.push_back(*it);
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::BadTree, "tree is disconnected");
  if (n < 4) throw Error(ErrorCode::BadTree, "order below 4");

  PlaneCubicTree t;
  t.parent_.assign(n, -1);
  t.children_.assign(n, {});
  for (Vertex old = 0; old < n; ++old) {
    const Vertex v = relabel[old];
    const auto expected = v == 0 ? 3u : 2u;
    if (!children[old].empty() && children[old].size() != expected) {
      throw Error(ErrorCode::BadTree, "vertex degree outside {1, 3}");
    }
    for (Vertex c : children[old]) {
      t.children_[v].push_back(relabel[c]);
      t.parent_[relabel[c]] = v;
    }
  }
  if (t.children_[0].size() != 3) throw Error(ErrorCode::BadTree, "root must be internal");
  return t;
}

PlaneCubicTree PlaneCubicTree::from_shape(std::string_view shape) {
  std::vector<std::vector<Vertex>> children;
  std::size_t cursor = 0;
  // Iterative preorder parse: each frame is (vertex, children still expected).
  std::vector<std::pair<Vertex, int>> pending;
  while (cursor < shape.size()) {
    const char c = shape[cursor++];
    if (c != '0' && c != '1') throw Error(ErrorCode::BadTree, "shape uses only '0' and '1'");
    const Vertex v = static_cast<Vertex>(children.size());
    children.emplace_back();
    if (!pending.empty()) {
      children[pending.back().first].push_back(v);
      if (--pending.back().second == 0) pending.pop_back();
    } else if (v != 0) {
      throw Error(ErrorCode::BadTree, "trailing characters after a complete tree");
    }
    if (c == '1') pending.emplace_back(v, v == 0 ? 3 : 2);
  }
  if (!pending.empty() || children.empty()) throw Error(ErrorCode::BadTree, "incomplete shape");
  return from_children(children, 0);
}

int PlaneCubicTree::num_internal() const {
  return static_cast<int>(std::count_if(children_.begin(), children_.end(),
                                        [](const auto& c) { return !c.empty(); }));
}

std::vector<Vertex> PlaneCubicTree::leaves() const {
  // Preorder ids make increasing id order the left-to-right order.
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<Edge> PlaneCubicTree::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 1; v < order(); ++v) out.emplace_back(parent_[v], v);
  return out;
}

GenericGraph PlaneCubicTree::adjacency() const {
  const auto e = edges();
  return GenericGraph::from_edges(order(), e);
}

HalinGraph PlaneCubicTree::close() const {
  const auto e = edges();
  const auto l = leaves();
  return build_halin(e, l);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Preorder shape strings of all full binary trees with k internal vertices.
std::vector<std::vector<std::string>> binary_shapes(int max_internal) {
  std::vector<std::vector<std::string>> shapes(max_internal + 1);
  shapes[0] = {"0"};
  for (int k = 1; k <= max_internal; ++k) {
    for (int left = 0; left < k; ++left) {
      for (const auto& a : shapes[left]) {
        for (const auto& b : shapes[k - 1 - left]) shapes[k].push_back("1" + a + b);
      }
    }
  }
  return shapes;
}

}  // namespace

std::vector<PlaneCubicTree> enumerate_plane_cubic_trees(int num_internal) {
  if (num_internal < 1) throw Error(ErrorCode::InvalidSize, "need at least one internal vertex");
  const int rest = num_internal - 1;
  const auto shapes = binary_shapes(rest);
  std::vector<PlaneCubicTree> out;
  for (int a = 0; a <= rest; ++a) {
    for (int b = 0; a + b <= rest; ++b) {
      const int c = rest - a - b;
      for (const auto& sa : shapes[a]) {
        for (const auto& sb : shapes[b]) {
          for (const auto& sc : shapes[c]) out.push_back(PlaneCubicTree::from_shape("1" + sa + sb + sc));
        }
      }
    }
  }
  return out;
}

std::vector<HalinGraph> enumerate_cubic_halin(int max_vertices, int cap) {
  if (max_vertices < 4) throw Error(ErrorCode::InvalidSize, "max_vertices must be at least 4");
  if (max_vertices > cap) {
    throw Error(ErrorCode::BoundTooLarge,
                std::to_string(max_vertices) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<HalinGraph> out;
  // A cubic Halin graph with m internal vertices has 2m + 2 vertices.
  for (int m = 1; 2 * m + 2 <= max_vertices; ++m) {
    std::map<std::vector<int>, bool> seen;
    for (const auto& tree : enumerate_plane_cubic_trees(m)) {
      HalinGraph h = tree.close();
      if (seen.emplace(canonical_code(h), true).second) out.push_back(std::move(h));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

namespace {

// Unbiased draw from [0, bound) independent of the standard library's
// distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

HalinGraph random_cubic_halin(int num_internal, std::uint64_t seed) {
  if (num_internal < 1) throw Error(ErrorCode::InvalidSize, "need at least one internal vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> children{{1, 2, 3}, {}, {}, {}};
  std::vector<Vertex> leaves{1, 2, 3};
  for (int step = 1; step < num_internal; ++step) {
    const auto pick = static_cast<std::size_t>(draw_below(rng, leaves.size()));
    const Vertex grown = leaves[pick];
    const auto a = static_cast<Vertex>(children.size());
    children.push_back({});
    children.push_back({});
    children[grown] = {a, a + 1};
    leaves[pick] = a;
    leaves.push_back(a + 1);
  }
  return PlaneCubicTree::from_children(children, 0).close();
}

// ---------------------------------------------------------------------------
// Named instances

HalinGraph named_instance(std::string_view name) {
  using Named = std::pair<std::string, std::string>;
  if (name == "K4") {
    const std::vector<Named> edges{{"r", "l1"}, {"r", "l2"}, {"r", "l3"}};
    const std::vector<std::string> cycle{"l1", "l2", "l3"};
    return build_halin(edges, cycle);
  }
  if (name == "prism6") {
    const std::vector<Named> edges{
        {"v1", "v2"}, {"v1", "l1"}, {"v1", "l2"}, {"v2", "l3"}, {"v2", "l4"}};
    const std::vector<std::string> cycle{"l1", "l2", "l3", "l4"};
    return build_halin(edges, cycle);
  }
  if (name == "G1") {
    const std::vector<Named> edges{{"r", "c1"},  {"r", "c2"},  {"r", "c3"},
                                   {"c1", "l1"}, {"c1", "l2"}, {"c2", "l3"},
                                   {"c2", "l4"}, {"c3", "l5"}, {"c3", "l6"}};
    const std::vector<std::string> cycle{"l1", "l2", "l3", "l4", "l5", "l6"};
    return build_halin(edges, cycle);
  }
  throw Error(ErrorCode::UnknownName, "no instance named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Embedding and canonical form

std::vector<std::vector<Vertex>> rotation_system(const HalinGraph& h) {
  const int n = h.cycle_length();
  std::vector<std::vector<Vertex>> rotation(h.order());
  std::vector<char> in_arc(n);
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.is_leaf(v)) {
      const int p = h.cycle_position(v);
      rotation[v] = {h.tree_neighbors(v).front(), h.cycle_at(p - 1), h.cycle_at(p + 1)};
      continue;
    }
    // Order the three branches by where their leaf arcs start on the cycle.
    std::vector<std::pair<int, Vertex>> keyed;
    for (Vertex w : h.tree_neighbors(v)) {
      std::fill(in_arc.begin(), in_arc.end(), 0);
      for (Vertex x : tree_side(h, w, v)) {
        if (h.is_leaf(x)) in_arc[h.cycle_position(x)] = 1;
      }
      int start = 0;
      while (!(in_arc[start] && !in_arc[(start + n - 1) % n])) ++start;
      keyed.emplace_back(start, w);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto [start, w] : keyed) rotation[v].push_back(w);
  }
  return rotation;
}

std::vector<int> canonical_code(const HalinGraph& h) {
  const auto rotation = rotation_system(h);
  const int order = h.order();
  std::vector<int> best;
  std::vector<int> code;
  std::vector<int> number(order);
  std::vector<Vertex> reference(order);
  std::vector<Vertex> queue(order);
  for (Vertex root = 0; root < order; ++root) {
    for (Vertex first : rotation[root]) {
      for (int step : {1, -1}) {
        std::fill(number.begin(), number.end(), 0);
        code.clear();
        int next_number = 1;
        number[root] = next_number++;
        reference[root] = first;
        std::size_t head = 0, tail = 0;
        queue[tail++] = root;
        bool worse = false;
        while (head < tail && !worse) {
          const Vertex x = queue[head++];
          const auto& rot = rotation[x];
          const int deg = static_cast<int>(rot.size());
          const int at = static_cast<int>(std::find(rot.begin(), rot.end(), reference[x]) - rot.begin());
          for (int i = 0; i < deg; ++i) {
            const Vertex y = rot[((at + step * i) % deg + deg) % deg];
            if (number[y] == 0) {
              number[y] = next_number++;
              reference[y] = x;
              queue[tail++] = y;
            }
            code.push_back(number[y]);
          }
          code.push_back(0);
          // Abandon as soon as the prefix is already larger than the best.
          if (!best.empty()) {
            const auto len = code.size();
            const auto cmp = std::lexicographical_compare_three_way(
                code.begin(), code.end(), best.begin(), best.begin() + len);
            if (cmp > 0) worse = true;
            if (cmp < 0) best.clear();
          }
        }
        if (!worse && (best.empty() || code < best)) best = code;
      }
    }
  }
  return best;
}

}  // namespace halin
