#pragma once

#include <algorithm>
#include <string>

#include "halin/graph.hpp"

inline halin::Vertex vertex_named(const halin::HalinGraph& h, const std::string& name) {
  const auto& names = h.names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("no vertex " + name);
  return static_cast<halin::Vertex>(it - names.begin());
}

inline halin::GenericGraph cycle_graph(int n) {
  halin::GenericGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline halin::GenericGraph complete_graph(int n) {
  halin::GenericGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

template <typename F>
halin::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const halin::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a halin::Error");
}
