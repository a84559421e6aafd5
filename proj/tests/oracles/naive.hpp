#pragma once

// Reference implementations used as test oracles. None of them call into the
// library beyond the plain graph container, so they can disagree with it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "halin/graph.hpp"

namespace oracle {

inline constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

// Cubic Halin graphs per vertex count, from networkx planarity checks and
// isomorphism tests (tests/oracles/halin_counts.py).
inline const std::map<int, int> kHalinCountsByOrder{{4, 1},  {6, 1},   {8, 1},  {10, 3},
                                                    {12, 4}, {14, 12}, {16, 27}};

// Connected graphs on n unlabeled vertices, n = 1..8.
inline constexpr std::array<int, 9> kConnectedGraphCounts{0, 1, 1, 2, 6, 21, 112, 853, 11117};

inline std::vector<std::vector<int>> floyd_warshall(const halin::GenericGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInfinity));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool naive_valid(const std::vector<std::vector<int>>& d, const std::vector<int>& s,
                        const std::vector<int>& classes) {
  const int n = static_cast<int>(classes.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (classes[u] == classes[v] && d[u][v] <= s[classes[u] - 1]) return false;
  return true;
}

// Tries all k^n assignments in odometer order; stops at the first valid one.
inline bool naive_colorable(const halin::GenericGraph& g, const std::vector<int>& s) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(s.size());
  const auto d = floyd_warshall(g);
  // near[c][v]: vertices that may not share class c with v.
  std::vector<std::vector<std::uint32_t>> near(k, std::vector<std::uint32_t>(n, 0));
  for (int c = 0; c < k; ++c)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && d[u][v] <= s[c]) near[c][u] |= 1u << v;
  std::vector<int> classes(n, 0);
  while (true) {
    std::vector<std::uint32_t> mask(k, 0);
    for (int v = 0; v < n; ++v) mask[classes[v]] |= 1u << v;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = (near[classes[v]][v] & mask[classes[v]]) == 0;
    if (ok) return true;
    int i = 0;
    while (i < n && ++classes[i] == k) classes[i++] = 0;
    if (i == n) return false;
  }
}

// Small graphs as adjacency bitmasks.
using SmallGraph = std::vector<std::uint32_t>;

inline std::uint64_t small_code(const SmallGraph& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
  return code;
}

// Exact canonical code: refine vertices by iterated neighbor-color multisets,
// then minimize the adjacency code over all orders that respect the cells.
inline std::uint64_t small_canonical(const SmallGraph& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (int u = 0; u < n; ++u)
        if ((adj[v] >> u) & 1u) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                 distinct.begin());
    if (next == color) break;
    color = next;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  // Odometer over the permutations of each cell.
  for (auto& [a, b] : cells) std::sort(order.begin() + a, order.begin() + b);
  while (true) {
    best = std::min(best, small_code(adj, order));
    std::size_t c = 0;
    while (c < cells.size() &&
           !std::next_permutation(order.begin() + cells[c].first, order.begin() + cells[c].second))
      ++c;
    if (c == cells.size()) break;
  }
  return best;
}

inline halin::GenericGraph to_generic(const SmallGraph& adj) {
  const int n = static_cast<int>(adj.size());
  halin::GenericGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((adj[u] >> v) & 1u) g.add_edge(u, v);
  return g;
}

// One representative per isomorphism class of connected graph on exactly n
// vertices. Every connected graph has a non-cut vertex, so adding a vertex
// with a nonempty neighborhood to the (n-1)-vertex classes reaches them all.
inline std::vector<SmallGraph> connected_graphs(int n) {
  std::vector<SmallGraph> level{SmallGraph{0u}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<SmallGraph> next;
    for (const auto& g : level) {
      for (std::uint32_t subset = 1; subset < (1u << (size - 1)); ++subset) {
        SmallGraph h = g;
        h.push_back(subset);
        for (int v = 0; v < size - 1; ++v)
          if ((subset >> v) & 1u) h[v] |= 1u << (size - 1);
        if (seen.insert(small_canonical(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace oracle
