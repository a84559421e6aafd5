#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int exit_code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("halin_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string(HALIN_PACKER_BIN) + " " + args + " > " + out.string() + " 2> " +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buffer.str()};
}

std::string save(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("gen, export and re-ingest") {
  const auto gen = run("gen --internal 6 --seed 3");
  REQUIRE(gen.exit_code == 0);
  const std::string graph = save("g.json", gen.out);
  const auto exported = run("export --format json --graph " + graph);
  CHECK(exported.exit_code == 0);
  CHECK(json::parse(exported.out) == json::parse(gen.out));
  const auto dot = run("export --format dot --graph " + graph);
  CHECK(dot.out.rfind("graph halin {", 0) == 0);
}

TEST_CASE("color then verify") {
  const std::string prism = save("prism.json", run("gen --name prism6").out);
  for (const auto& [schedule, full] : {std::pair{"1123", "1-1-2-3"}, std::pair{"122222", "1-2-2-2-2-2"}}) {
    const auto colored = run(std::string("color --schedule ") + schedule + " --in " + prism);
    REQUIRE(colored.exit_code == 0);
    const json doc = json::parse(colored.out);
    CHECK(doc.contains("diagnostics"));
    const std::string coloring = save("c.json", colored.out);
    const auto verified = run(std::string("verify --schedule ") + full + " --graph " + prism + " --coloring " + coloring);
    CHECK(verified.exit_code == 0);
    CHECK(json::parse(verified.out)["valid"] == true);
  }
  const std::string lemma = save("l.json", run("color --schedule lemma1 --in " + prism).out);
  CHECK(run("verify --tree-only --schedule 1-2-2-2 --graph " + prism + " --coloring " + lemma).exit_code == 0);
}

TEST_CASE("exit codes") {
  const std::string g1 = save("g1.json", run("gen --name G1").out);
  const auto unsat = run("solve --schedule 1-1-3-3 --graph " + g1);
  CHECK(unsat.exit_code == 3);
  CHECK(json::parse(unsat.out)["status"] == "Unsat");
  CHECK(run("solve --schedule 1-1-2-3 --graph " + g1).exit_code == 0);
  CHECK(run("solve --schedule 1-1-3-3 --node-limit 2 --graph " + g1).exit_code == 4);

  const std::string bad = save("bad.json", R"({"format_version":1,"schedule":[1,1,2,3],"colors":{"nope":1}})");
  CHECK(run("verify --schedule 1-1-2-3 --graph " + g1 + " --coloring " + bad).exit_code == 64);

  const std::string invalid = save("invalid.json", R"({"format_version":1,"schedule":[1,2],"colors":{"r":1,"c1":1,"c2":1,"c3":1,"l1":1,"l2":2,"l3":1,"l4":2,"l5":1,"l6":2}})");
  CHECK(run("verify --schedule 1-2 --graph " + g1 + " --coloring " + invalid).exit_code == 3);

  const std::string crossed = save("crossed.json",
      R"({"tree_edges":[["v1","v2"],["v1","l1"],["v1","l2"],["v2","l3"],["v2","l4"]],"cycle":["l1","l3","l2","l4"]})");
  CHECK(run("export --format json --graph " + crossed).exit_code == 65);
  CHECK(run("color --schedule 1123 --in " + save("junk.json", "{not json")).exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("gen --name nosuch").exit_code == 64);
}

TEST_CASE("survey writes reproducible CSV") {
  const std::string a = (scratch() / "a.csv").string(), b = (scratch() / "b.csv").string();
  CHECK(run("survey --max 10 --schedules 1-1-2-4,1-2-2-2-2 --reproducible --out " + a).exit_code == 0);
  CHECK(run("survey --max 10 --schedules 1-1-2-4,1-2-2-2-2 --reproducible --out " + b).exit_code == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("graph_id,n,schedule,status,elapsed_ms\n", 0) == 0);
}
