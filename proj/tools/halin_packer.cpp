// halin_packer: generate cubic Halin graphs, color them, verify and solve
// S-packing colorings, and run surveys over enumerated instances.
//
// Exit codes: 0 success / valid / Sat, 3 Unsat or invalid coloring,
// 4 Unknown (search limits), 64 usage or parse error, 65 invalid input graph.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "halin/constructive.hpp"
#include "halin/generators.hpp"
#include "halin/io.hpp"
#include "halin/solver.hpp"

namespace {

using namespace halin;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 3;
constexpr int kUnknown = 4;
constexpr int kUsage = 64;
constexpr int kBadGraph = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

HalinGraph read_graph(const std::string& path) { return io::graph_from_json(read_json(path)); }

bool is_graph_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree:
    case ErrorCode::BadDegree:
    case ErrorCode::OrderTooSmall:
    case ErrorCode::CycleMismatch:
    case ErrorCode::NonPlanarOrder:
      return true;
    default:
      return false;
  }
}

SearchConfig make_config(std::uint64_t node_limit, double time_limit_seconds, bool no_symmetry) {
  SearchConfig cfg;
  cfg.node_limit = node_limit;
  cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit_seconds * 1000.0));
  cfg.symmetry_breaking = !no_symmetry;
  return cfg;
}

int survey_threads() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("HALIN_PACKER_THREADS")) {
    const int parsed = std::atoi(cap);
    if (parsed >= 1) threads = std::min(threads, parsed);
  }
  return threads;
}

std::vector<SPacking> parse_schedule_list(const std::string& text) {
  std::vector<SPacking> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(SPacking::parse(item));
  if (out.empty()) throw UsageError("no schedules given");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Cubic Halin graph S-packing colorings"};
  app.require_subcommand(1, 1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate one cubic Halin graph");
  int gen_internal = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_name;
  auto* internal_opt = gen->add_option("--internal", gen_internal, "Number of internal vertices");
  gen->add_option("--seed", gen_seed, "Random seed");
  auto* name_opt = gen->add_option("--name", gen_name, "Named instance: K4, prism6 or G1");
  internal_opt->excludes(name_opt);

  // enum
  auto* enumerate = app.add_subcommand("enum", "Enumerate cubic Halin graphs up to isomorphism");
  int enum_max = 0;
  enumerate->add_option("--max", enum_max, "Maximum number of vertices")->required();

  // color
  auto* color = app.add_subcommand("color", "Constructive coloring");
  std::string color_schedule, color_in;
  color->add_option("--schedule", color_schedule, "1123, 122222 or lemma1")
      ->required()
      ->check(CLI::IsMember({"1123", "122222", "lemma1"}));
  color->add_option("--in", color_in, "Graph JSON file ('-' for stdin)")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a coloring against a schedule");
  std::string verify_schedule, verify_graph, verify_coloring;
  bool verify_tree_only = false;
  verify->add_option("--schedule", verify_schedule, "Hyphen-joined schedule")->required();
  verify->add_option("--graph", verify_graph, "Graph JSON file")->required();
  verify->add_option("--coloring", verify_coloring, "Coloring JSON file")->required();
  verify->add_flag("--tree-only", verify_tree_only, "Measure distances in the tree alone");

  // solve
  auto* solve = app.add_subcommand("solve", "Exact search for an S-packing coloring");
  std::string solve_schedule, solve_graph;
  std::uint64_t node_limit = SearchConfig{}.node_limit;
  double time_limit = 60.0;
  bool no_symmetry = false;
  solve->add_option("--schedule", solve_schedule, "Hyphen-joined schedule")->required();
  solve->add_option("--graph", solve_graph, "Graph JSON file")->required();
  solve->add_option("--node-limit", node_limit, "Search node limit");
  solve->add_option("--time-limit", time_limit, "Time limit in seconds");
  solve->add_flag("--no-symmetry", no_symmetry, "Disable class symmetry breaking");

  // survey
  auto* surv = app.add_subcommand("survey", "Solve every enumerated graph for several schedules");
  int survey_max = 0;
  std::string survey_schedules, survey_mode = "exact", survey_out;
  bool reproducible = false;
  surv->add_option("--max", survey_max, "Maximum number of vertices")->required();
  surv->add_option("--schedules", survey_schedules, "Comma-separated schedules")->required();
  surv->add_option("--mode", survey_mode, "exact or crosscheck")
      ->check(CLI::IsMember({"exact", "crosscheck"}));
  surv->add_option("--out", survey_out, "CSV output file ('-' for stdout)")->required();
  surv->add_option("--node-limit", node_limit, "Search node limit per row");
  surv->add_option("--time-limit", time_limit, "Time limit per row in seconds");
  surv->add_flag("--reproducible", reproducible, "Leave elapsed_ms empty");

  // export
  auto* exp = app.add_subcommand("export", "Render a graph as DOT or canonical JSON");
  std::string export_format, export_graph, export_coloring;
  exp->add_option("--format", export_format, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--graph", export_graph, "Graph JSON file")->required();
  exp->add_option("--coloring", export_coloring, "Coloring JSON used for DOT labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      if (gen_name.empty() && internal_opt->count() == 0) {
        throw UsageError("gen needs --internal or --name");
      }
      const HalinGraph h =
          gen_name.empty() ? random_cubic_halin(gen_internal, gen_seed) : named_instance(gen_name);
      std::cout << io::graph_to_json(h).dump() << '\n';
      return kOk;
    }

    if (*enumerate) {
      for (const auto& h : enumerate_cubic_halin(enum_max)) std::cout << io::graph_to_json(h).dump() << '\n';
      return kOk;
    }

    if (*color) {
      const HalinGraph h = read_graph(color_in);
      json doc;
      if (color_schedule == "lemma1") {
        doc = io::coloring_to_json(h, schedule_1222(), lemma1_tree_coloring(tree_graph(h)));
        doc["diagnostics"] = nullptr;
      } else {
        const bool first = color_schedule == "1123";
        const auto result = first ? color_1123(h) : color_122222(h);
        doc = io::coloring_to_json(h, first ? schedule_1123() : schedule_122222(), result.coloring);
        doc["diagnostics"] = io::diagnostics_to_json(h, result.diagnostics);
      }
      std::cout << doc.dump() << '\n';
      return kOk;
    }

    if (*verify) {
      const HalinGraph h = read_graph(verify_graph);
      const SPacking schedule = SPacking::parse(verify_schedule);
      const auto document = io::coloring_from_json(read_json(verify_coloring), h);
      const GenericGraph g = verify_tree_only ? tree_graph(h) : full_graph(h);
      const auto report = verify_packing(g, schedule, document.coloring);
      std::cout << io::report_to_json(h, report).dump() << '\n';
      return report.valid ? kOk : kNegative;
    }

    if (*solve) {
      const HalinGraph h = read_graph(solve_graph);
      const SPacking schedule = SPacking::parse(solve_schedule);
      const auto result =
          decide(full_graph(h), schedule, make_config(node_limit, time_limit, no_symmetry));
      std::cout << io::solve_result_to_json(h, schedule, result).dump() << '\n';
      switch (result.status) {
        case SolveStatus::Sat: return kOk;
        case SolveStatus::Unsat: return kNegative;
        case SolveStatus::Unknown: return kUnknown;
      }
    }

    if (*surv) {
      const auto schedules = parse_schedule_list(survey_schedules);
      const auto inputs = label_for_survey(enumerate_cubic_halin(survey_max));
      const auto mode = survey_mode == "crosscheck" ? SurveyMode::ConstructiveCrossCheck : SurveyMode::Exact;
      const auto rows = survey(inputs, schedules, make_config(node_limit, time_limit, false), mode,
                               survey_threads());
      if (survey_out == "-") {
        write_survey_csv(std::cout, rows, !reproducible);
      } else {
        std::ofstream out(survey_out, std::ios::binary);
        if (!out) throw UsageError("cannot write " + survey_out);
        write_survey_csv(out, rows, !reproducible);
      }
      const bool unknown = std::any_of(rows.begin(), rows.end(),
                                       [](const SurveyRow& r) { return r.status == SurveyStatus::Unknown; });
      return unknown ? kUnknown : kOk;
    }

    if (*exp) {
      const HalinGraph h = read_graph(export_graph);
      if (export_format == "json") {
        std::cout << io::graph_to_json(h).dump() << '\n';
        return kOk;
      }
      if (export_coloring.empty()) {
        std::cout << io::to_dot(h);
      } else {
        const auto document = io::coloring_from_json(read_json(export_coloring), h);
        std::cout << io::to_dot(h, &document.schedule, &document.coloring);
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_graph_error(e.code()) ? kBadGraph : kUsage;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
