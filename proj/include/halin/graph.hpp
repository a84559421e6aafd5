#pragma once

// Core graph types: simple undirected graphs, cubic Halin graphs (tree plus
// leaf cycle), packing schedules, colorings, all-pairs distances, the
// S-packing verifier and the subdivision lift.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halin/error.hpp"

namespace halin {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense vertex ids 0..n-1.
class GenericGraph {
 public:
  GenericGraph() = default;
  explicit GenericGraph(int vertex_count);

  /// Throws InvalidInput on self-loops, duplicate edges or out-of-range ids.
  static GenericGraph from_edges(int vertex_count, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Each edge once as (u, v) with u < v, ordered by u then by insertion.
  std::vector<Edge> edges() const;
  bool is_connected() const;

  bool operator==(const GenericGraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// A cubic Halin graph G = T u C. Vertex ids are dense and assigned in order
/// of first appearance in the tree edge list; the input ids are kept as names.
class HalinGraph {
 public:
  int order() const { return static_cast<int>(names_.size()); }
  int cycle_length() const { return static_cast<int>(cycle_.size()); }

  const std::vector<Edge>& tree_edges() const { return tree_edges_; }
  const std::vector<Vertex>& tree_neighbors(Vertex v) const { return tree_adjacency_[v]; }
  const std::vector<std::vector<Vertex>>& tree_adjacency() const { return tree_adjacency_; }

  /// Leaves in cyclic order a_1..a_n (0-based positions).
  const std::vector<Vertex>& cycle() const { return cycle_; }
  /// Position of v on the cycle, or -1 for internal vertices.
  int cycle_position(Vertex v) const { return cycle_position_[v]; }
  bool is_leaf(Vertex v) const { return cycle_position_[v] >= 0; }
  /// Leaf at a cyclic position; any integer is reduced modulo n.
  Vertex cycle_at(int position) const;

  std::vector<Vertex> internal_vertices() const;
  /// Cycle neighbors of an internal vertex, in increasing cycle position.
  std::vector<Vertex> leaf_neighbors(Vertex v) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_[v]; }

  bool operator==(const HalinGraph&) const = default;

 private:
  friend HalinGraph build_halin(std::span<const std::pair<std::string, std::string>>,
                                std::span<const std::string>);

  std::vector<std::string> names_;
  std::vector<Edge> tree_edges_;
  std::vector<std::vector<Vertex>> tree_adjacency_;
  std::vector<Vertex> cycle_;
  std::vector<int> cycle_position_;
};

/// Non-decreasing sequence of positive integers (s_1, ..., s_k).
class SPacking {
 public:
  explicit SPacking(std::vector<int> values);

  /// Accepts hyphen-joined integers ("1-1-2-3") and the shorthands
  /// "1123" and "122222".
  static SPacking parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  /// Distance parameter of class index cls (1-based).
  int s(int cls) const { return values_[cls - 1]; }
  int max_distance() const { return values_.back(); }
  const std::vector<int>& values() const { return values_; }
  std::string to_string() const;

  bool operator==(const SPacking&) const = default;

 private:
  std::vector<int> values_;
};

/// Vertex -> class index in 1..k; 0 marks an unassigned vertex.
class Coloring {
 public:
  static constexpr int kUnassigned = 0;

  Coloring() = default;
  explicit Coloring(int vertex_count) : classes_(vertex_count, kUnassigned) {}
  explicit Coloring(std::vector<int> classes) : classes_(std::move(classes)) {}

  int size() const { return static_cast<int>(classes_.size()); }
  int operator[](Vertex v) const { return classes_[v]; }
  int& operator[](Vertex v) { return classes_[v]; }
  const std::vector<int>& classes() const { return classes_; }
  bool is_total() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> classes_;
};

/// Dense all-pairs shortest path lengths.
class DistanceOracle {
 public:
  static constexpr int kDefaultMaxVertices = 4096;

  DistanceOracle() = default;

  int size() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  friend DistanceOracle all_pairs_distances(const GenericGraph&, int);

  int n_ = 0;
  std::vector<std::uint16_t> dist_;
};

struct Violation {
  Vertex u;
  Vertex v;
  int cls;
  int distance;

  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

struct LiftedColoring {
  Coloring coloring;
  SPacking schedule;
};

HalinGraph build_halin(std::span<const std::pair<std::string, std::string>> tree_edges,
                       std::span<const std::string> cycle_order);
HalinGraph build_halin(std::span<const Edge> tree_edges, std::span<const Vertex> cycle_order);

/// Tree edges plus consecutive-cycle edges.
GenericGraph full_graph(const HalinGraph& h);
/// The characteristic tree alone.
GenericGraph tree_graph(const HalinGraph& h);

/// Throws Disconnected if some pair is unreachable, OracleTooLarge above the cap.
DistanceOracle all_pairs_distances(const GenericGraph& g,
                                   int max_vertices = DistanceOracle::kDefaultMaxVertices);

int cycle_distance(const HalinGraph& h, Vertex u, Vertex v);

/// Vertices reachable from `from` in T without passing through `blocked`.
std::vector<Vertex> tree_side(const HalinGraph& h, Vertex from, Vertex blocked);

VerificationReport verify_packing(const GenericGraph& g, const SPacking& schedule,
                                  const Coloring& coloring, const DistanceOracle& oracle);
VerificationReport verify_packing(const GenericGraph& g, const SPacking& schedule,
                                  const Coloring& coloring);

/// Replaces every edge by a 2-path. Original vertices keep their ids; the
/// midpoint of the e-th edge of g.edges() gets id n + e.
GenericGraph subdivide(const GenericGraph& g);

/// Maps a valid S-packing coloring of g to a (1, 2s_1+1, ..., 2s_k+1)-packing
/// coloring of subdivide(g). Throws InvalidInput if the coloring is not valid.
LiftedColoring lift_coloring(const Coloring& coloring, const SPacking& schedule,
                             const GenericGraph& g);

}  // namespace halin
