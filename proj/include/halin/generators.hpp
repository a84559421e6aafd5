#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

/// Rooted tree with ordered children and all degrees in {1, 3}. Vertex ids are
/// preorder positions, so the root is 0. Reading the leaves left to right
/// gives a cycle order that always satisfies the contiguity test.
class PlaneCubicTree {
 public:
  /// Builds from a preorder shape string: '1' for an internal vertex, '0' for
  /// a leaf. An internal root takes three children, other internal vertices
  /// two. Throws BadTree if the string does not describe such a tree.
  static PlaneCubicTree from_shape(std::string_view shape);
  /// Builds from ordered child lists of an arbitrary labeling, renumbering
  /// the vertices in preorder from `root`.
  static PlaneCubicTree from_children(const std::vector<std::vector<Vertex>>& children,
                                      Vertex root);

  int order() const { return static_cast<int>(parent_.size()); }
  int num_internal() const;
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  bool is_leaf(Vertex v) const { return children_[v].empty(); }

  std::vector<Vertex> leaves() const;
  /// (parent, child) pairs in preorder of the child.
  std::vector<Edge> edges() const;
  GenericGraph adjacency() const;
  HalinGraph close() const;

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
};

inline constexpr int kDefaultEnumerationCap = 22;

/// All plane cubic trees with the given number of internal vertices, rooted
/// at an internal vertex. Every cubic tree appears at least once.
std::vector<PlaneCubicTree> enumerate_plane_cubic_trees(int num_internal);

/// One representative per isomorphism class of cubic Halin graph with at
/// most max_vertices vertices, ordered by vertex count and then by discovery.
std::vector<HalinGraph> enumerate_cubic_halin(int max_vertices, int cap = kDefaultEnumerationCap);

/// Grows a star by repeatedly attaching two leaves to a uniformly chosen leaf.
HalinGraph random_cubic_halin(int num_internal, std::uint64_t seed);

/// "K4", "prism6" or "G1".
HalinGraph named_instance(std::string_view name);

/// Counterclockwise neighbor order of every vertex of full_graph(h) in the
/// embedding with T inside C.
std::vector<std::vector<Vertex>> rotation_system(const HalinGraph& h);

/// Isomorphism invariant of a cubic Halin graph: the lexicographically least
/// breadth-first code over all starting darts and both orientations. Halin
/// graphs are 3-connected, so their embedding is unique up to reflection and
/// equal codes mean isomorphic graphs.
std::vector<int> canonical_code(const HalinGraph& h);

}  // namespace halin
