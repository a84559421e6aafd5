#include "halin/constructive.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <tuple>

#include "halin/solver.hpp"

namespace halin {

const SPacking& schedule_1123() {
  static const SPacking s({1, 1, 2, 3});
  return s;
}
const SPacking& schedule_1222() {
  static const SPacking s({1, 2, 2, 2});
  return s;
}
const SPacking& schedule_122222() {
  static const SPacking s({1, 2, 2, 2, 2, 2});
  return s;
}

std::string_view to_string(ConflictKind kind) {
  return kind == ConflictKind::Type1 ? "Type1" : "Type2";
}

std::string_view to_string(Resolution resolution) {
  switch (resolution) {
    case Resolution::AssignedX2: return "AssignedX2";
    case Resolution::SwitchedOneClasses: return "SwitchedOneClasses";
    case Resolution::SubcaseI: return "SubcaseI";
    case Resolution::SubcaseII: return "SubcaseII";
    case Resolution::NoneNeeded: return "NoneNeeded";
  }
  return "NoneNeeded";
}

std::string_view to_string(CaseTaken c) {
  switch (c) {
    case CaseTaken::Case1: return "Case1";
    case CaseTaken::Case2: return "Case2";
    case CaseTaken::SpecialK4: return "SpecialK4";
  }
  return "Case1";
}

Coloring two_color_tree(const HalinGraph& h) {
  const auto internal = h.internal_vertices();
  Coloring phi(h.order());
  std::queue<Vertex> queue;
  phi[internal.front()] = cls1123::kOne;
  queue.push(internal.front());
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : h.tree_neighbors(u)) {
      if (phi[w] != Coloring::kUnassigned) continue;
      phi[w] = phi[u] == cls1123::kOne ? cls1123::kOnePrime : cls1123::kOne;
      queue.push(w);
    }
  }
  return phi;
}

namespace {

using namespace cls1123;

int flip_one(int c) { return c == kOne ? kOnePrime : kOne; }
bool is_one_class(int c) { return c == kOne || c == kOnePrime; }

Vertex third_neighbor(const HalinGraph& h, Vertex v, Vertex a, Vertex b) {
  for (Vertex w : h.tree_neighbors(v)) {
    if (w != a && w != b) return w;
  }
  return -1;
}

void fall_back(const GenericGraph& g, const DistanceOracle& oracle, const SPacking& schedule,
               ConstructiveResult& result) {
  result.diagnostics.fallback_used = true;
  const auto solved = decide(g, oracle, schedule);
  if (solved.status != SolveStatus::Sat) {
    throw Error(ErrorCode::FallbackExhausted,
                "exact search returned " + std::string(to_string(solved.status)));
  }
  result.coloring = *solved.coloring;
}

// Paints the cycle from `start` with the repeating sequence (i, 2, i, 3), where
// each i slot takes its class from `base`, for `count` positions.
void paint_i2i3(const HalinGraph& h, int start, int count, const Coloring& base, Coloring& c) {
  for (int t = 0; t < count; ++t) {
    const Vertex v = h.cycle_at(start + t);
    switch (t % 4) {
      case 1: c[v] = kTwo; break;
      case 3: c[v] = kThree; break;
      default: c[v] = base[v]; break;
    }
  }
}

// Resolves one Type-2 conflict by promoting d (tree neighbor of leaf_d) to
// class 2. Anything the argument rules out is reported in `notes`.
ConflictRecord resolve_type2(const HalinGraph& h, Vertex d, Vertex e, Vertex leaf_d, Vertex leaf_e,
                             Coloring& c, Coloring& base, std::vector<std::string>& notes) {
  ConflictRecord record{ConflictKind::Type2, d, e, leaf_d, leaf_e, {}};
  const Vertex d_third = third_neighbor(h, d, leaf_d, e);
  const auto region = tree_side(h, d_third, d);
  std::vector<char> in_region(h.order(), 0);
  for (Vertex u : region) in_region[u] = 1;

  const int n = h.cycle_length();
  const int pos_d = h.cycle_position(leaf_d);
  // +1 when the region lies just before leaf_d on the cycle.
  const int dir = in_region[h.cycle_at(pos_d - 1)] ? 1 : -1;
  const Vertex inner = h.cycle_at(pos_d - dir);
  const Vertex outer = h.cycle_at(pos_d + dir);

  c[d] = kTwo;
  record.resolution.push_back(Resolution::AssignedX2);

  const int alpha = is_one_class(c[outer]) ? flip_one(c[outer])
                                           : (c[inner] == kOne ? kOnePrime : kOne);
  c[leaf_d] = alpha;
  base[leaf_d] = alpha;
  if (c[inner] == alpha) {
    for (Vertex u : region) {
      base[u] = flip_one(base[u]);
      if (is_one_class(c[u])) c[u] = flip_one(c[u]);
    }
    record.resolution.push_back(Resolution::SwitchedOneClasses);
  }

  if (h.is_leaf(d_third)) notes.push_back("third neighbor of " + h.name(d) + " is on the cycle");

  // (ii) the outer neighbor of a_i had class 2.
  if (c[outer] == kTwo) {
    c[outer] = kThree;
    record.resolution.push_back(Resolution::SubcaseII);
  }

  // (i) the third neighbor touches a class-2 cycle vertex at the far end of
  // the region: rewrite the region pattern from that end.
  if (!h.is_leaf(d_third)) {
    const int far_pos = ((h.cycle_position(leaf_e) + dir) % n + n) % n;
    for (Vertex z : h.leaf_neighbors(d_third)) {
      if (c[z] != kTwo) continue;
      if (h.cycle_position(z) != far_pos) {
        notes.push_back("class-2 neighbor of " + h.name(d_third) + " is not at the far end");
        continue;
      }
      c[z] = base[z];
      c[h.cycle_at(far_pos + dir)] = kTwo;
      for (int t = far_pos + 2 * dir; h.cycle_at(t) != leaf_d; t += dir) {
        const Vertex u = h.cycle_at(t);
        if (c[u] == kTwo) {
          c[u] = kThree;
        } else if (c[u] == kThree) {
          c[u] = kTwo;
        }
      }
      record.resolution.push_back(Resolution::SubcaseI);
    }
  }

  // (iii) cannot happen: class 2 never directly precedes class 3.
  if (c[inner] == kTwo) notes.push_back("inner neighbor of " + h.name(leaf_d) + " has class 2");
  return record;
}

// Case 1: some consecutive a_{i0}, a_{i0+1} have tree classes 1', 1.
void color_case1(const HalinGraph& h, const DistanceOracle& oracle, Coloring& c,
                 ColoringDiagnostics& diag) {
  const int n = h.cycle_length();
  Coloring base = c;
  int i0 = 0;
  while (!(c[h.cycle_at(i0)] == kOnePrime && c[h.cycle_at(i0 + 1)] == kOne)) ++i0;

  if (n % 4 == 2) {
    paint_i2i3(h, i0 + 1, n - 2, base, c);
    const Vertex before = h.cycle_at(i0 - 1);
    if (base[before] != kOne) c[before] = kTwo;
  } else {
    paint_i2i3(h, i0 + 1, n, base, c);
  }

  // Type 1: two cycle vertices sharing a tree neighbor with the same class 2 or 3.
  for (Vertex x : h.internal_vertices()) {
    const auto leaves = h.leaf_neighbors(x);
    for (std::size_t a = 0; a < leaves.size(); ++a) {
      for (std::size_t b = a + 1; b < leaves.size(); ++b) {
        if (c[leaves[a]] == c[leaves[b]] && !is_one_class(c[leaves[a]])) {
          diag.conflicts.push_back({ConflictKind::Type1, x, std::nullopt, leaves[a], leaves[b], {}});
          diag.notes.push_back("type 1 conflict at " + h.name(x));
        }
      }
    }
  }

  // Type 2: a_i - x - y - a_j with both ends in class 3.
  struct Pending {
    Vertex x, y, p, q;
    int low, high;
  };
  std::vector<Pending> pending;
  for (auto [x, y] : h.tree_edges()) {
    if (h.is_leaf(x) || h.is_leaf(y)) continue;
    for (Vertex p : h.leaf_neighbors(x)) {
      for (Vertex q : h.leaf_neighbors(y)) {
        if (c[p] != kThree || c[q] != kThree) continue;
        const int lo = std::min(h.cycle_position(p), h.cycle_position(q));
        const int hi = std::max(h.cycle_position(p), h.cycle_position(q));
        pending.push_back({x, y, p, q, lo, hi});
      }
    }
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.low, a.high) < std::tie(b.low, b.high);
  });

  std::vector<Vertex> promoted;
  for (const auto& conflict : pending) {
    if (c[conflict.p] != kThree || c[conflict.q] != kThree) {
      diag.conflicts.push_back({ConflictKind::Type2, conflict.x, conflict.y, conflict.p, conflict.q,
                                {Resolution::NoneNeeded}});
      continue;
    }
    // The designated vertex is the one whose third branch holds the leaves
    // strictly inside the arc a_j..a_i with j < i.
    auto branch_inside = [&](Vertex v, Vertex leaf, Vertex other) {
      const Vertex third = third_neighbor(h, v, leaf, other);
      for (Vertex u : tree_side(h, third, v)) {
        if (!h.is_leaf(u)) continue;
        const int pos = h.cycle_position(u);
        if (pos <= conflict.low || pos >= conflict.high) return false;
      }
      return true;
    };
    Vertex d = conflict.x, e = conflict.y, leaf_d = conflict.p, leaf_e = conflict.q;
    if (!branch_inside(d, leaf_d, e)) {
      std::swap(d, e);
      std::swap(leaf_d, leaf_e);
    }
    Coloring trial = c, trial_base = base;
    std::vector<std::string> trial_notes;
    ConflictRecord record =
        resolve_type2(h, d, e, leaf_d, leaf_e, trial, trial_base, trial_notes);
    if (!trial_notes.empty()) {
      // The mirrored designation: promote the other tree vertex instead.
      Coloring mirror = c, mirror_base = base;
      std::vector<std::string> mirror_notes;
      ConflictRecord mirrored =
          resolve_type2(h, e, d, leaf_e, leaf_d, mirror, mirror_base, mirror_notes);
      if (mirror_notes.empty()) {
        mirrored.mirrored = true;
        diag.notes.push_back("promoted " + h.name(e) + " instead of " + h.name(d) + ": " +
                             trial_notes.front());
        record = std::move(mirrored);
        trial = std::move(mirror);
        trial_base = std::move(mirror_base);
        trial_notes.clear();
      }
    }
    c = std::move(trial);
    base = std::move(trial_base);
    diag.notes.insert(diag.notes.end(), trial_notes.begin(), trial_notes.end());
    promoted.push_back(record.x);
    diag.conflicts.push_back(std::move(record));
  }

  for (std::size_t a = 0; a < promoted.size(); ++a) {
    for (std::size_t b = a + 1; b < promoted.size(); ++b) {
      if (oracle(promoted[a], promoted[b]) < 3) {
        diag.notes.push_back("promoted vertices " + h.name(promoted[a]) + " and " +
                             h.name(promoted[b]) + " are too close");
      }
    }
  }
}

// Case 2: every cycle vertex has the same tree class.
void color_case2(const HalinGraph& h, Coloring& c, ColoringDiagnostics& diag) {
  const int n = h.cycle_length();
  const int same = c[h.cycle_at(0)];
  const int other = flip_one(same);
  // The repeating sequence (1, 2, 1, 3) with "1" read as the shared class.
  auto paint_1213 = [&](int start, int count) {
    for (int t = 0; t < count; ++t) {
      static constexpr std::array<int, 4> kPattern{0, kTwo, 0, kThree};
      const int cls = kPattern[t % 4];
      c[h.cycle_at(start + t)] = cls == 0 ? same : cls;
    }
  };

  if (n % 4 == 0) {
    paint_1213(0, n);
    return;
  }

  const auto internal = h.internal_vertices();
  const auto single = std::find_if(internal.begin(), internal.end(), [&](Vertex v) {
    return h.leaf_neighbors(v).size() == 1;
  });
  if (single != internal.end()) {
    const Vertex w = *single;
    const int k = h.cycle_position(h.leaf_neighbors(w).front());
    c[w] = kTwo;
    c[h.cycle_at(k)] = other;
    if (n % 4 == 3) {
      paint_1213(k + 1, n - 3);
      c[h.cycle_at(k - 2)] = kTwo;
      c[h.cycle_at(k - 1)] = same;
    } else {
      paint_1213(k + 1, n - 1);
    }
    return;
  }

  // Every tree vertex touching C has two consecutive cycle neighbors.
  if (n % 4 != 2) diag.notes.push_back("no single-contact tree vertex but n mod 4 != 2");
  const auto touching = std::find_if(internal.begin(), internal.end(), [&](Vertex v) {
    return !h.leaf_neighbors(v).empty();
  });
  const Vertex w = *touching;
  const auto leaves = h.leaf_neighbors(w);
  const int p1 = h.cycle_position(leaves.front());
  const int p2 = h.cycle_position(leaves.back());
  const int j = p2 == p1 + 1 ? p2 : p1;  // a_j follows a_i on the cycle
  c[w] = kTwo;
  c[h.cycle_at(j)] = other;
  paint_1213(j + 1, n - 1);
}

}  // namespace

ConstructiveResult color_1123(const HalinGraph& h) {
  const GenericGraph g = full_graph(h);
  const DistanceOracle oracle = all_pairs_distances(g);
  const int n = h.cycle_length();

  ConstructiveResult result{two_color_tree(h), {}};
  auto& diag = result.diagnostics;
  diag.n_mod_4 = n % 4;

  if (h.internal_vertices().size() == 1) {
    // K4: all four vertices pairwise adjacent.
    diag.case_taken = CaseTaken::SpecialK4;
    for (Vertex v = 0; v < h.order(); ++v) result.coloring[v] = v + 1;
  } else {
    Coloring& c = result.coloring;
    const bool constant = std::all_of(h.cycle().begin(), h.cycle().end(),
                                      [&](Vertex v) { return c[v] == c[h.cycle().front()]; });
    if (constant) {
      diag.case_taken = CaseTaken::Case2;
      color_case2(h, c, diag);
    } else {
      diag.case_taken = CaseTaken::Case1;
      color_case1(h, oracle, c, diag);
    }
  }

  if (!verify_packing(g, schedule_1123(), result.coloring, oracle).valid) {
    fall_back(g, oracle, schedule_1123(), result);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tree coloring and the (1,2,2,2,2,2) coloring

namespace {

Vertex third_neighbor_tree(const GenericGraph& tree, Vertex v, Vertex a, Vertex b) {
  for (Vertex w : tree.neighbors(v)) {
    if (w != a && w != b) return w;
  }
  return -1;
}

}  // namespace


Coloring lemma1_tree_coloring(const GenericGraph& tree) {
  const int order = tree.vertex_count();
  if (order < 4) throw Error(ErrorCode::BadTree, "tree order below 4");
  if (tree.edge_count() != order - 1 || !tree.is_connected()) {
    throw Error(ErrorCode::BadTree, "graph is not a tree");
  }
  for (Vertex v = 0; v < order; ++v) {
    if (tree.degree(v) != 1 && tree.degree(v) != 3) {
      throw Error(ErrorCode::BadTree, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(tree.degree(v)));
    }
  }

  // Peel pairs of sibling leaves, smallest parent id first, down to a star.
  std::vector<int> degree(order);
  for (Vertex v = 0; v < order; ++v) degree[v] = tree.degree(v);
  std::vector<char> alive(order, 1);
  int alive_count = order;
  struct Step {
    Vertex z, x, y;
  };
  std::vector<Step> steps;
  while (alive_count > 4) {
    bool peeled = false;
    for (Vertex z = 0; z < order && !peeled; ++z) {
      if (!alive[z] || degree[z] != 3) continue;
      std::vector<Vertex> leaves;
      for (Vertex w : tree.neighbors(z)) {
        if (alive[w] && degree[w] == 1) leaves.push_back(w);
      }
      if (leaves.size() < 2) continue;
      const Vertex x = leaves[0], y = leaves[1];
      alive[x] = alive[y] = 0;
      alive_count -= 2;
      degree[z] = 1;
      steps.push_back({z, x, y});
      peeled = true;
    }
    if (!peeled) throw std::logic_error("no vertex with two leaf neighbors");
  }

  Coloring c(order);
  for (Vertex v = 0; v < order; ++v) {
    if (alive[v]) c[v] = degree[v] == 3 ? cls122222::kTwoA : cls122222::kOne;
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto [z, x, y] = *it;
    c[x] = c[y] = cls122222::kOne;
    const Vertex z_up = third_neighbor_tree(tree, z, x, y);
    std::array<bool, cls122222::kTwoC + 1> taken{};
    taken[c[z_up]] = true;
    for (Vertex u : tree.neighbors(z_up)) {
      if (u != z) taken[c[u]] = true;
    }
    int free_class = 0;
    for (int cls : {cls122222::kTwoA, cls122222::kTwoB, cls122222::kTwoC}) {
      if (!taken[cls]) {
        free_class = cls;
        break;
      }
    }
    if (free_class != 0) {
      c[z] = free_class;
    } else {
      c[z] = c[z_up];
      c[z_up] = cls122222::kOne;
    }
  }
  return c;
}

Coloring lemma1_tree_coloring(const PlaneCubicTree& tree) {
  return lemma1_tree_coloring(tree.adjacency());
}

std::vector<int> cycle_blocks_122222(int n) {
  for (int fours = n / 4; fours >= 0; --fours) {
    const int rest = n - 4 * fours;
    if (rest % 3 != 0) continue;
    std::vector<int> pattern;
    for (int b = 0; b < fours; ++b) pattern.insert(pattern.end(), {cls122222::kOne, cls122222::kTwoD, cls122222::kOne, cls122222::kTwoE});
    for (int b = 0; b < rest / 3; ++b) pattern.insert(pattern.end(), {cls122222::kOne, cls122222::kTwoD, cls122222::kTwoE});
    return pattern;
  }
  return {};
}

ConstructiveResult color_122222(const HalinGraph& h) {
  const GenericGraph g = full_graph(h);
  const DistanceOracle oracle = all_pairs_distances(g);
  const int n = h.cycle_length();

  ConstructiveResult result{lemma1_tree_coloring(tree_graph(h)), {}};
  auto& diag = result.diagnostics;
  diag.n_mod_4 = n % 4;
  Coloring& c = result.coloring;

  const auto pattern = cycle_blocks_122222(n);
  if (!pattern.empty()) {
    for (int t = 0; t < n; ++t) c[h.cycle_at(t)] = pattern[t];
    if (!verify_packing(g, schedule_122222(), c, oracle).valid) {
      diag.notes.push_back("block pattern failed verification");
      fall_back(g, oracle, schedule_122222(), result);
    }
    return result;
  }

  // n = 5: blocks cannot tile the cycle. Use (1, 2_d, 1, 2_e, X) and give X a
  // tree 2-class that is at distance at least 3 from its other members.
  diag.fallback_used = true;
  diag.notes.push_back("cycle length " + std::to_string(n) + " has no block decomposition");
  for (int r = 0; r < n; ++r) {
    Coloring trial = c;
    const std::array<int, 4> head{cls122222::kOne, cls122222::kTwoD, cls122222::kOne, cls122222::kTwoE};
    for (int t = 0; t < 4; ++t) trial[h.cycle_at(r + t)] = head[t];
    const Vertex last = h.cycle_at(r + 4);
    for (int cls : {cls122222::kTwoA, cls122222::kTwoB, cls122222::kTwoC}) {
      bool clear = true;
      for (Vertex u = 0; u < h.order() && clear; ++u) {
        if (u != last && h.is_leaf(u) == false && trial[u] == cls && oracle(u, last) < 3) clear = false;
      }
      if (!clear) continue;
      trial[last] = cls;
      if (verify_packing(g, schedule_122222(), trial, oracle).valid) {
        c = trial;
        return result;
      }
    }
  }
  fall_back(g, oracle, schedule_122222(), result);
  return result;
}

}  // namespace halin
