#include "halin/solver.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <stdexcept>
#include <thread>

#include "halin/constructive.hpp"

namespace halin {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat: return "Sat";
    case SolveStatus::Unsat: return "Unsat";
    case SolveStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(SurveyStatus status) {
  switch (status) {
    case SurveyStatus::Sat: return "Sat";
    case SurveyStatus::Unsat: return "Unsat";
    case SurveyStatus::Unknown: return "Unknown";
    case SurveyStatus::ConstructiveValid: return "ConstructiveValid";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const GenericGraph& g, const DistanceOracle& oracle, const SPacking& schedule,
         const SearchConfig& cfg)
      : n_(g.vertex_count()), k_(schedule.size()), schedule_(schedule), cfg_(cfg),
        colors_(n_, Coloring::kUnassigned), blocked_(static_cast<std::size_t>(n_) * (k_ + 1), 0),
        available_(n_, k_), colored_near_(n_, 0), used_(k_ + 1, 0), reach_(n_) {
    // near_[v] lists the other vertices within max(s) of v by distance;
    // reach_[v][c] is how many of them lie within s_c.
    near_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u = 0; u < n_; ++u) {
        if (u != v && oracle(u, v) <= schedule.max_distance()) near_[v].push_back(u);
      }
      std::stable_sort(near_[v].begin(), near_[v].end(),
                       [&](Vertex a, Vertex b) { return oracle(v, a) < oracle(v, b); });
      reach_[v].assign(k_ + 1, 0);
      for (int c = 1; c <= k_; ++c) {
        reach_[v][c] = static_cast<int>(std::count_if(
            near_[v].begin(), near_[v].end(),
            [&](Vertex u) { return oracle(v, u) <= schedule.s(c); }));
      }
    }
  }

  SolveStatus run() {
    start_ = Clock::now();
    const bool found = n_ == 0 || descend(0);
    if (found) return SolveStatus::Sat;
    return aborted_ ? SolveStatus::Unknown : SolveStatus::Unsat;
  }

  Coloring coloring() const { return Coloring(colors_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(int depth) {
    if (depth == n_) return true;
    const Vertex v = pick_vertex();
    for (int c = 1; c <= k_; ++c) {
      if (blocked_at(v, c) > 0) continue;
      if (cfg_.symmetry_breaking && c > 1 && schedule_.s(c - 1) == schedule_.s(c) &&
          used_[c - 1] == 0) {
        continue;
      }
      if (++nodes_ > cfg_.node_limit || out_of_time()) {
        aborted_ = true;
        return false;
      }
      const bool consistent = assign(v, c);
      if (consistent && descend(depth + 1)) return true;
      unassign(v, c);
      if (aborted_) return false;
    }
    return false;
  }

  Vertex pick_vertex() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors_[v] != Coloring::kUnassigned) continue;
      if (best < 0 || colored_near_[v] > colored_near_[best]) best = v;
    }
    return best;
  }

  // Returns false when some uncolored vertex is left with no admissible class.
  bool assign(Vertex v, int c) {
    colors_[v] = c;
    ++used_[c];
    bool consistent = true;
    const auto& near = near_[v];
    for (int i = 0; i < reach_[v][c]; ++i) {
      const Vertex u = near[i];
      if (blocked_at(u, c)++ == 0 && --available_[u] == 0 && colors_[u] == Coloring::kUnassigned) {
        consistent = false;
      }
    }
    for (Vertex u : near) ++colored_near_[u];
    return consistent;
  }

  void unassign(Vertex v, int c) {
    const auto& near = near_[v];
    for (int i = 0; i < reach_[v][c]; ++i) {
      const Vertex u = near[i];
      if (--blocked_at(u, c) == 0) ++available_[u];
    }
    for (Vertex u : near) --colored_near_[u];
    --used_[c];
    colors_[v] = Coloring::kUnassigned;
  }

  int& blocked_at(Vertex v, int c) { return blocked_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  bool out_of_time() const {
    if ((nodes_ & 0xfff) != 0) return false;
    return Clock::now() - start_ > cfg_.time_limit;
  }

  int n_;
  int k_;
  const SPacking& schedule_;
  const SearchConfig& cfg_;
  std::vector<int> colors_;
  std::vector<int> blocked_;
  std::vector<int> available_;
  std::vector<int> colored_near_;
  std::vector<int> used_;
  std::vector<std::vector<Vertex>> near_;
  std::vector<std::vector<int>> reach_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  Clock::time_point start_;
};

}  // namespace

SolveResult decide(const GenericGraph& g, const DistanceOracle& oracle, const SPacking& schedule,
                   const SearchConfig& cfg) {
  if (schedule.size() > kMaxScheduleLength) {
    throw Error(ErrorCode::InvalidSchedule,
                "schedules longer than " + std::to_string(kMaxScheduleLength) + " are not searched");
  }
  const auto started = Clock::now();
  Search search(g, oracle, schedule, cfg);
  SolveResult result;
  result.status = search.run();
  result.nodes_explored = search.nodes();
  if (result.status == SolveStatus::Sat) {
    result.coloring = search.coloring();
    if (!verify_packing(g, schedule, *result.coloring, oracle).valid) {
      throw std::logic_error("exact search produced an invalid coloring");
    }
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started);
  return result;
}

SolveResult decide(const GenericGraph& g, const SPacking& schedule, const SearchConfig& cfg) {
  return decide(g, all_pairs_distances(g), schedule, cfg);
}

ChromaticResult packing_chromatic_number(const GenericGraph& g, int k_max,
                                         const SearchConfig& cfg) {
  if (k_max < 1) throw Error(ErrorCode::InvalidInput, "k_max must be at least 1");
  const auto oracle = all_pairs_distances(g);
  std::vector<int> values;
  for (int k = 1; k <= k_max; ++k) {
    values.push_back(k);
    const auto result = decide(g, oracle, SPacking(values), cfg);
    if (result.status == SolveStatus::Sat) return {ChromaticResult::Status::Found, k};
    if (result.status == SolveStatus::Unknown) return {ChromaticResult::Status::Unknown, k};
  }
  return {ChromaticResult::Status::NotWithinBound, k_max};
}

// ---------------------------------------------------------------------------
// Survey

namespace {

SurveyRow survey_row(const SurveyInput& input, const SPacking& schedule, const SearchConfig& cfg,
                     SurveyMode mode) {
  const auto started = Clock::now();
  SurveyRow row{input.graph_id, input.graph.order(), schedule, SurveyStatus::Unknown, {}};
  const GenericGraph g = full_graph(input.graph);
  const bool constructive = mode == SurveyMode::ConstructiveCrossCheck &&
                            (schedule == schedule_1123() || schedule == schedule_122222());
  if (constructive) {
    const auto result = schedule == schedule_1123() ? color_1123(input.graph)
                                                    : color_122222(input.graph);
    row.status = verify_packing(g, schedule, result.coloring).valid ? SurveyStatus::ConstructiveValid
                                                                    : SurveyStatus::Unknown;
  } else {
    switch (decide(g, schedule, cfg).status) {
      case SolveStatus::Sat: row.status = SurveyStatus::Sat; break;
      case SolveStatus::Unsat: row.status = SurveyStatus::Unsat; break;
      case SolveStatus::Unknown: row.status = SurveyStatus::Unknown; break;
    }
  }
  row.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started);
  return row;
}

}  // namespace

std::vector<SurveyRow> survey(std::span<const SurveyInput> graphs,
                              std::span<const SPacking> schedules, const SearchConfig& cfg,
                              SurveyMode mode, int threads) {
  const std::size_t total = graphs.size() * schedules.size();
  std::vector<std::optional<SurveyRow>> slots(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const auto& input = graphs[i / schedules.size()];
      const auto& schedule = schedules[i % schedules.size()];
      try {
        slots[i] = survey_row(input, schedule, cfg, mode);
      } catch (const std::exception&) {
        slots[i] = SurveyRow{input.graph_id, input.graph.order(), schedule, SurveyStatus::Unknown, {}};
      }
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  std::vector<SurveyRow> rows;
  rows.reserve(total);
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

std::vector<SurveyInput> label_for_survey(std::vector<HalinGraph> graphs) {
  std::vector<SurveyInput> out;
  int previous_order = -1;
  int index = 0;
  for (auto& h : graphs) {
    index = h.order() == previous_order ? index + 1 : 1;
    previous_order = h.order();
    out.push_back({"v" + std::to_string(h.order()) + "-" + std::to_string(index), std::move(h)});
  }
  return out;
}

void write_survey_csv(std::ostream& out, std::span<const SurveyRow> rows, bool include_timing) {
  out << "graph_id,n,schedule,status,elapsed_ms\n";
  for (const auto& row : rows) {
    out << row.graph_id << ',' << row.vertex_count << ',' << row.schedule.to_string() << ','
        << to_string(row.status) << ',';
    if (include_timing) {
      out << std::fixed << std::setprecision(3) << static_cast<double>(row.elapsed.count()) / 1000.0;
    }
    out << '\n';
  }
}

}  // namespace halin
