#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "halin/generators.hpp"
#include "halin/graph.hpp"

namespace halin {

// Class indices used by color_1123 under S = (1, 1, 2, 3).
namespace cls1123 {
inline constexpr int kOne = 1;
inline constexpr int kOnePrime = 2;
inline constexpr int kTwo = 3;
inline constexpr int kThree = 4;
}  // namespace cls1123

// Class indices used by lemma1_tree_coloring and color_122222 under
// S = (1, 2, 2, 2, 2, 2). The tree coloring uses only the first four.
namespace cls122222 {
inline constexpr int kOne = 1;
inline constexpr int kTwoA = 2;
inline constexpr int kTwoB = 3;
inline constexpr int kTwoC = 4;
inline constexpr int kTwoD = 5;
inline constexpr int kTwoE = 6;
}  // namespace cls122222

const SPacking& schedule_1123();
const SPacking& schedule_1222();
const SPacking& schedule_122222();

enum class ConflictKind { Type1, Type2 };
enum class Resolution { AssignedX2, SwitchedOneClasses, SubcaseI, SubcaseII, NoneNeeded };
enum class CaseTaken { Case1, Case2, SpecialK4 };

std::string_view to_string(ConflictKind kind);
std::string_view to_string(Resolution resolution);
std::string_view to_string(CaseTaken c);

/// One detected conflict. For Type2, x is the tree vertex that received
/// class 2, y its tree neighbor, a_i the cycle neighbor of x and a_j the
/// cycle neighbor of y.
struct ConflictRecord {
  ConflictKind kind;
  Vertex x;
  std::optional<Vertex> y;
  Vertex a_i;
  Vertex a_j;
  std::vector<Resolution> resolution;
  /// The other endpoint of the tree path was promoted because the literal
  /// choice ran into a case the argument rules out.
  bool mirrored = false;
};

struct ColoringDiagnostics {
  /// Set by color_1123 only.
  std::optional<CaseTaken> case_taken;
  int n_mod_4 = 0;
  std::vector<ConflictRecord> conflicts;
  /// True whenever the literal procedure did not produce a valid coloring
  /// and a repair step (greedy completion or exact search) took over.
  bool fallback_used = false;
  /// Free-form notes about internal assertions that fired.
  std::vector<std::string> notes;
};

struct ConstructiveResult {
  Coloring coloring;
  ColoringDiagnostics diagnostics;
};

/// Proper 2-coloring of T with classes 1 and 1' (indices 1 and 2): the
/// lowest-id internal vertex gets class 1, the rest alternate by depth.
Coloring two_color_tree(const HalinGraph& h);

/// (1,1,2,3)-packing coloring of a cubic Halin graph. Throws
/// FallbackExhausted only if the exact search also fails.
ConstructiveResult color_1123(const HalinGraph& h);

/// (1,2,2,2)-packing coloring of a tree with degrees in {1, 3} in which
/// every leaf has class 1. Throws BadTree on other inputs.
Coloring lemma1_tree_coloring(const GenericGraph& tree);
Coloring lemma1_tree_coloring(const PlaneCubicTree& tree);

/// (1,2,2,2,2,2)-packing coloring of a cubic Halin graph.
ConstructiveResult color_122222(const HalinGraph& h);

/// Cycle pattern for color_122222: blocks (1, 2_d, 2_e) and (1, 2_d, 1, 2_e)
/// covering n positions, preferring the four-blocks. Empty when n has no
/// such decomposition (only n = 1, 2, 5).
std::vector<int> cycle_blocks_122222(int n);

}  // namespace halin
