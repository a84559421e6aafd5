#include <doctest.h>

#include <algorithm>
#include <random>

#include "halin/constructive.hpp"
#include "halin/generators.hpp"
#include "halin/graph.hpp"
#include "support.hpp"

using namespace halin;
using Named = std::pair<std::string, std::string>;

namespace {

const std::vector<Named> kPrismTree{
    {"v1", "v2"}, {"v1", "l1"}, {"v1", "l2"}, {"v2", "l3"}, {"v2", "l4"}};

}  // namespace

TEST_CASE("build_halin accepts the star and the prism") {
  const std::vector<Named> star{{"r", "l1"}, {"r", "l2"}, {"r", "l3"}};
  const std::vector<std::string> star_cycle{"l1", "l2", "l3"};
  const HalinGraph k4 = build_halin(star, star_cycle);
  CHECK(k4.order() == 4);
  CHECK(k4.cycle_length() == 3);
  const GenericGraph g = full_graph(k4);
  CHECK(g.edge_count() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);

  const std::vector<std::string> cycle{"l1", "l2", "l3", "l4"};
  const HalinGraph prism = build_halin(kPrismTree, cycle);
  CHECK(prism.order() == 6);
  CHECK(prism.cycle_length() == 4);
  CHECK(full_graph(prism).edge_count() == 9);
  CHECK(prism.name(0) == "v1");
  CHECK(prism.leaf_neighbors(vertex_named(prism, "v2")) ==
        std::vector<Vertex>{vertex_named(prism, "l3"), vertex_named(prism, "l4")});
}

TEST_CASE("build_halin rejects malformed input") {
  const std::vector<std::string> crossed{"l1", "l3", "l2", "l4"};
  CHECK(error_code_of([&] { build_halin(kPrismTree, crossed); }) == ErrorCode::NonPlanarOrder);

  const std::vector<std::string> missing{"l1", "l2", "l3"};
  CHECK(error_code_of([&] { build_halin(kPrismTree, missing); }) == ErrorCode::CycleMismatch);

  const std::vector<Named> with_cycle{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  const std::vector<std::string> abc{"a", "b", "c"};
  CHECK(error_code_of([&] { build_halin(with_cycle, abc); }) == ErrorCode::NotATree);

  const std::vector<Named> path{{"a", "b"}, {"b", "c"}};
  const std::vector<std::string> ac{"a", "c"};
  CHECK(error_code_of([&] { build_halin(path, ac); }) == ErrorCode::OrderTooSmall);

  // A vertex of degree 4 with four leaves.
  const std::vector<Named> star4{{"r", "a"}, {"r", "b"}, {"r", "c"}, {"r", "d"}};
  const std::vector<std::string> abcd{"a", "b", "c", "d"};
  CHECK(error_code_of([&] { build_halin(star4, abcd); }) == ErrorCode::BadDegree);
}

TEST_CASE("integer ids follow first appearance") {
  const std::vector<Edge> edges{{7, 3}, {7, 4}, {7, 5}};
  const std::vector<Vertex> cycle{3, 4, 5};
  const HalinGraph h = build_halin(edges, cycle);
  CHECK(h.name(0) == "7");
  CHECK(h.name(1) == "3");
  CHECK_FALSE(h.is_leaf(0));
  CHECK(h.cycle_position(1) == 0);
  CHECK(h.cycle_at(-1) == 3);
}

TEST_CASE("distances on small graphs") {
  const DistanceOracle k4 = all_pairs_distances(full_graph(named_instance("K4")));
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) CHECK(k4(u, v) == (u == v ? 0 : 1));

  GenericGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(all_pairs_distances(path)(0, 2) == 2);

  const HalinGraph prism = named_instance("prism6");
  const DistanceOracle d = all_pairs_distances(full_graph(prism));
  CHECK(d(vertex_named(prism, "l1"), vertex_named(prism, "l3")) == 2);

  CHECK(error_code_of([] { all_pairs_distances(GenericGraph(2)); }) == ErrorCode::Disconnected);
  CHECK(error_code_of([&] { all_pairs_distances(path, 2); }) == ErrorCode::OracleTooLarge);
}

TEST_CASE("cycle_distance") {
  const HalinGraph k4 = named_instance("K4");
  CHECK(cycle_distance(k4, vertex_named(k4, "l1"), vertex_named(k4, "l2")) == 1);
  const HalinGraph prism = named_instance("prism6");
  CHECK(cycle_distance(prism, vertex_named(prism, "l1"), vertex_named(prism, "l3")) == 2);
  const HalinGraph g1 = named_instance("G1");
  CHECK(cycle_distance(g1, g1.cycle_at(0), g1.cycle_at(4)) == 2);
  CHECK(error_code_of([&] { cycle_distance(g1, vertex_named(g1, "r"), g1.cycle_at(0)); }) ==
        ErrorCode::NotOnCycle);
}

TEST_CASE("verify_packing examples") {
  const GenericGraph k4 = full_graph(named_instance("K4"));
  CHECK(verify_packing(k4, SPacking::parse("1123"), Coloring({1, 2, 3, 4})).valid);

  const GenericGraph c4 = cycle_graph(4);
  CHECK(verify_packing(c4, SPacking({1, 2, 3}), Coloring({1, 2, 1, 3})).valid);

  const auto report = verify_packing(c4, SPacking({1, 2}), Coloring({1, 2, 1, 2}));
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == Violation{1, 3, 2, 2});

  CHECK(error_code_of([&] { verify_packing(c4, SPacking({1, 2}), Coloring({1, 0, 1, 2})); }) ==
        ErrorCode::PartialColoring);
  CHECK(error_code_of([&] { verify_packing(c4, SPacking({1, 2}), Coloring({1, 3, 1, 2})); }) ==
        ErrorCode::ClassOutOfRange);
}

TEST_CASE("SPacking parsing") {
  CHECK(SPacking::parse("1123").values() == std::vector<int>{1, 1, 2, 3});
  CHECK(SPacking::parse("122222").values() == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK(SPacking::parse("1-1-2-4").values() == std::vector<int>{1, 1, 2, 4});
  CHECK(SPacking::parse("1-2-10").to_string() == "1-2-10");
  CHECK(error_code_of([] { SPacking::parse("2-1"); }) == ErrorCode::InvalidSchedule);
  CHECK(error_code_of([] { SPacking::parse("1-x"); }) == ErrorCode::InvalidSchedule);
}

TEST_CASE("subdivide and lift") {
  GenericGraph edge(2);
  edge.add_edge(0, 1);
  const GenericGraph path = subdivide(edge);
  CHECK(path.vertex_count() == 3);
  CHECK(path.has_edge(0, 2));
  CHECK(path.has_edge(2, 1));

  const auto lifted = lift_coloring(Coloring({1, 2}), SPacking({1, 1}), edge);
  CHECK(lifted.coloring == Coloring({2, 3, 1}));
  CHECK(lifted.schedule == SPacking({1, 3, 3}));

  const GenericGraph k4 = full_graph(named_instance("K4"));
  const GenericGraph sk4 = subdivide(k4);
  CHECK(sk4.vertex_count() == 10);
  CHECK(sk4.edge_count() == 12);
  const auto k4_lift = lift_coloring(Coloring({1, 2, 3, 4}), SPacking::parse("1123"), k4);
  CHECK(k4_lift.schedule == SPacking({1, 3, 3, 5, 7}));
  CHECK(verify_packing(sk4, k4_lift.schedule, k4_lift.coloring).valid);

  CHECK(error_code_of([&] { lift_coloring(Coloring({1, 1}), SPacking({1, 1}), edge); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("structural invariants over the enumeration") {
  for (const HalinGraph& h : enumerate_cubic_halin(16)) {
    const GenericGraph g = full_graph(h);
    const DistanceOracle d = all_pairs_distances(g);
    const int n = h.cycle_length();
    CHECK(h.order() % 2 == 0);
    CHECK(n == static_cast<int>(h.internal_vertices().size()) + 2);
    CHECK(subdivide(g).vertex_count() == h.order() + 3 * h.order() / 2);
    for (Vertex v = 0; v < h.order(); ++v) CHECK(g.degree(v) == 3);
    for (Vertex u = 0; u < h.order(); ++u) {
      CHECK(d(u, u) == 0);
      for (Vertex v = 0; v < h.order(); ++v) {
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (Vertex w = 0; w < h.order(); ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
    }
    for (Vertex u : h.cycle()) {
      for (Vertex v : h.cycle()) {
        const int dc = cycle_distance(h, u, v);
        if (dc <= 2) {
          CHECK(d(u, v) == dc);
        } else {
          CHECK(d(u, v) >= 3);
        }
      }
    }
    for (Vertex x : h.internal_vertices()) {
      const auto leaves = h.leaf_neighbors(x);
      if (leaves.size() == 2 && n > 3) CHECK(cycle_distance(h, leaves[0], leaves[1]) == 1);
    }
  }
}

TEST_CASE("verifier monotonicity and equal-class permutation") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const HalinGraph h = random_cubic_halin(2 + static_cast<int>(seed % 9), seed);
    const GenericGraph g = full_graph(h);
    const auto result = color_1123(h);
    REQUIRE(verify_packing(g, schedule_1123(), result.coloring).valid);
    // Smaller distances: (1, 1, 1, 2), (1, 1, 2, 2), (1, 1, 1, 1).
    for (const auto& smaller : {SPacking({1, 1, 1, 2}), SPacking({1, 1, 2, 2}), SPacking({1, 1, 1, 1})})
      CHECK(verify_packing(g, smaller, result.coloring).valid);
    // Swapping 1 and 1' keeps validity.
    Coloring swapped = result.coloring;
    for (Vertex v = 0; v < swapped.size(); ++v) {
      if (swapped[v] == 1) swapped[v] = 2;
      else if (swapped[v] == 2) swapped[v] = 1;
    }
    CHECK(verify_packing(g, schedule_1123(), swapped).valid);

    // Same for the five 2-classes of (1, 2, 2, 2, 2, 2).
    const auto second = color_122222(h);
    std::vector<int> perm{2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    Coloring permuted = second.coloring;
    for (Vertex v = 0; v < permuted.size(); ++v)
      if (permuted[v] > 1) permuted[v] = perm[permuted[v] - 2];
    CHECK(verify_packing(g, schedule_122222(), permuted).valid);
  }
}

TEST_CASE("lift soundness on constructive colorings") {
  for (const HalinGraph& h : enumerate_cubic_halin(12)) {
    const GenericGraph g = full_graph(h);
    const auto lifted = lift_coloring(color_1123(h).coloring, schedule_1123(), g);
    CHECK(verify_packing(subdivide(g), lifted.schedule, lifted.coloring).valid);
  }
}
