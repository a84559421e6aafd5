#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

inline constexpr int kMaxScheduleLength = 16;

struct SearchConfig {
  std::uint64_t node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{60'000};
  bool symmetry_breaking = true;
};

enum class SolveStatus { Sat, Unsat, Unknown };
std::string_view to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  /// Present iff status is Sat; always passes verify_packing.
  std::optional<Coloring> coloring;
  std::uint64_t nodes_explored = 0;
  std::chrono::microseconds elapsed{0};
};

/// Exhaustive backtracking decision procedure for S-packing colorability.
/// Unsat is reported only after the whole search space has been exhausted.
SolveResult decide(const GenericGraph& g, const SPacking& schedule, const SearchConfig& cfg = {});
SolveResult decide(const GenericGraph& g, const DistanceOracle& oracle, const SPacking& schedule,
                   const SearchConfig& cfg = {});

struct ChromaticResult {
  enum class Status { Found, NotWithinBound, Unknown };
  Status status = Status::Unknown;
  /// The packing chromatic number when Found; otherwise the first k that
  /// could not be settled (Unknown) or k_max (NotWithinBound).
  int k = 0;
};

/// Least k <= k_max such that g is (1, 2, ..., k)-packing colorable.
ChromaticResult packing_chromatic_number(const GenericGraph& g, int k_max,
                                         const SearchConfig& cfg = {});

enum class SurveyMode { Exact, ConstructiveCrossCheck };
enum class SurveyStatus { Sat, Unsat, Unknown, ConstructiveValid };
std::string_view to_string(SurveyStatus status);

struct SurveyRow {
  std::string graph_id;
  int vertex_count = 0;
  SPacking schedule;
  SurveyStatus status = SurveyStatus::Unknown;
  std::chrono::microseconds elapsed{0};
};

struct SurveyInput {
  std::string graph_id;
  HalinGraph graph;
};

/// One row per (graph, schedule) pair, graph-major, in input order. Rows are
/// computed on up to `threads` worker threads; a row never aborts the batch.
std::vector<SurveyRow> survey(std::span<const SurveyInput> graphs,
                              std::span<const SPacking> schedules, const SearchConfig& cfg,
                              SurveyMode mode, int threads = 1);

/// Survey ids "v<order>-<k>", k counting graphs of equal order from 1.
std::vector<SurveyInput> label_for_survey(std::vector<HalinGraph> graphs);

/// CSV with header graph_id,n,schedule,status,elapsed_ms. With
/// include_timing false the elapsed_ms field is left empty so that repeated
/// runs are byte-identical.
void write_survey_csv(std::ostream& out, std::span<const SurveyRow> rows, bool include_timing);

}  // namespace halin
