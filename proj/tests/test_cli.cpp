#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using commevo::run_cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "commevo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "commevo_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch(name);
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string toy_path() { return write_file("toy.txt", commevo::testing::toy_edge_list); }

std::string toy_truth_csv() {
  std::ostringstream s;
  for (int v = 1; v <= 12; ++v) s << v << ',' << (v - 1) / 4 << '\n';
  return write_file("toy_truth.csv", s.str());
}

}  // namespace

TEST_CASE("detect on the toy network with defaults") {
  auto r = run({"detect", toy_path()});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["best"]["k"] == 3);
  CHECK(std::abs(j["best"]["Q"].get<double>() - 11.0 / 21.0) < 1e-9);
  CHECK(j["config"]["population"] == 100);
  CHECK(j["config"]["generations"] == 100);
  CHECK(j["config"]["crossover"] == 0.8);
  CHECK(j["config"]["mutation"] == 0.2);
  CHECK(j["config"]["parents"] == 4);
}

TEST_CASE("detect writes report and best partition files") {
  auto prefix = scratch("detect_run").string();
  auto r = run({"detect", toy_path(), "--generations", "1", "--population", "4", "--output",
                prefix});
  REQUIRE(r.code == 0);
  auto j = json::parse(slurp(prefix + ".json"));
  CHECK(j["front"].size() >= 1);
  CHECK(j["config"]["generations"] == 1);
  auto best = slurp(prefix + ".best.csv");
  CHECK(std::count(best.begin(), best.end(), '\n') == 12);
}

TEST_CASE("detect is reproducible apart from timing") {
  auto a = json::parse(run({"detect", toy_path(), "--generations", "5", "--seed", "9"}).out);
  auto b = json::parse(
      run({"detect", toy_path(), "--generations", "5", "--seed", "9", "--workers", "3"}).out);
  a.erase("timing");
  b.erase("timing");
  a["config"].erase("workers");
  b["config"].erase("workers");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("detect error handling") {
  auto empty = run({"detect", write_file("empty.txt", "# nothing\n")});
  CHECK(empty.code == 2);
  CHECK(empty.err.find("empty graph") != std::string::npos);

  CHECK(run({"detect", scratch("does_not_exist.txt").string()}).code == 2);
  CHECK(run({"detect", write_file("bad.txt", "1 2\n3\n")}).code == 2);
  CHECK(run({"detect", toy_path(), "--population", "5"}).code == 3);
  CHECK(run({"detect", toy_path(), "--generations", "0"}).code == 3);
  CHECK(run({"detect", toy_path(), "--bogus"}).code == 3);
  CHECK(run({}).code == 3);
}

TEST_CASE("worker count from the environment, overridden by the flag") {
  ::setenv("COMMEVO_WORKERS", "2", 1);
  auto env = json::parse(run({"detect", toy_path(), "--generations", "1"}).out);
  auto flag =
      json::parse(run({"detect", toy_path(), "--generations", "1", "--workers", "3"}).out);
  ::setenv("COMMEVO_WORKERS", "zero", 1);
  auto bad = run({"detect", toy_path(), "--generations", "1"});
  ::unsetenv("COMMEVO_WORKERS");
  CHECK(env["config"]["workers"] == 2);
  CHECK(flag["config"]["workers"] == 3);
  CHECK(bad.code == 3);
}

TEST_CASE("eval") {
  auto g = toy_path();
  auto truth = toy_truth_csv();
  auto same = json::parse(run({"eval", truth, truth, g}).out);
  CHECK(same["nmi"] == 1.0);
  CHECK(same["ami"] == 1.0);
  CHECK(same["H"] == 1.0);
  CHECK(std::abs(same["modularity"].get<double>() - 11.0 / 21.0) < 1e-12);

  std::ostringstream one;
  for (int v = 1; v <= 12; ++v) one << v << ",all\n";
  auto all = json::parse(run({"eval", write_file("one.csv", one.str()), truth, g}).out);
  CHECK(std::abs(all["modularity"].get<double>()) < 1e-12);
  CHECK(all["nmi"] == 0.0);

  auto crossed_graph = write_file("square.txt", "a b\nb c\nc d\nd a\n");
  auto p = write_file("p.csv", "a,0\nb,0\nc,1\nd,1\n");
  auto q = write_file("q.csv", "a,0\nb,1\nc,0\nd,1\n");
  auto crossed = json::parse(run({"eval", p, q, crossed_graph}).out);
  CHECK(std::abs(crossed["nmi"].get<double>()) < 1e-12);

  auto partial = write_file("partial.csv", "1,0\n2,0\n");
  CHECK(run({"eval", partial, truth, g}).code == 3);

  auto csv = run({"eval", truth, truth, g, "--format", "csv"});
  CHECK(csv.out.rfind("nmi,ami,H,modularity\n", 0) == 0);
}

TEST_CASE("generate is byte-identical across runs") {
  auto a = scratch("gen_a").string();
  auto b = scratch("gen_b").string();
  for (const auto& prefix : {a, b})
    REQUIRE(run({"generate", "--n", "1000", "--mu", "0.3", "--graph-seed", "7", "--output",
                 prefix})
                .code == 0);
  for (const char* ext : {".edges", ".truth.csv", ".spec.json"}) {
    CHECK(slurp(a + ext) == slurp(b + ext));
    CHECK_FALSE(slurp(a + ext).empty());
  }
  auto spec = json::parse(slurp(a + ".spec.json"));
  CHECK(spec["n"] == 1000);
  CHECK(spec["mu"] == 0.3);

  auto e = run({"generate", "--n", "100", "--min-community", "200", "--output", a});
  CHECK(e.code == 3);
}

TEST_CASE("generated files feed detect and eval") {
  auto prefix = scratch("gen_small").string();
  REQUIRE(run({"generate", "--n", "120", "--avg-degree", "8", "--min-community", "15",
               "--max-community", "30", "--mu", "0.1", "--output", prefix})
              .code == 0);
  auto det = scratch("gen_small_det").string();
  REQUIRE(run({"detect", prefix + ".edges", "--population", "20", "--generations", "20",
               "--output", det})
              .code == 0);
  auto r = run({"eval", det + ".best.csv", prefix + ".truth.csv", prefix + ".edges"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["nmi"].get<double>() > 0.5);
}

TEST_CASE("bench report shape and plot data") {
  auto prefix = scratch("bench").string();
  auto r = run({"bench", "--n-grid", "150", "--mu-grid", "0.1", "0.2", "0.3", "--seeds", "2",
                "--avg-degree", "8", "--min-community", "15", "--max-community", "30",
                "--population", "10", "--generations", "5", "--output", prefix});
  REQUIRE(r.code == 0);
  auto summary = slurp(prefix + ".summary.csv");
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 4);
  auto runs = slurp(prefix + ".runs.csv");
  CHECK(std::count(runs.begin(), runs.end(), '\n') == 7);
  for (const char* panel : {".nmi.csv", ".ami.csv", ".H.csv", ".wall_ms.csv"}) {
    auto text = slurp(prefix + panel);
    CHECK(text.rfind("n,mu,E,mean,low,high\n", 0) == 0);
    CHECK(text.find(",50,") != std::string::npos);  // E = 10 * 5 on every row
  }
  auto doc = json::parse(slurp(prefix + ".json"));
  CHECK(doc["cells"].size() == 3);
  CHECK(doc["config"]["population"] == 10);

  auto threads = run({"bench", "--n", "150", "--avg-degree", "8", "--min-community", "15",
                      "--max-community", "30", "--population", "10", "--generations", "3",
                      "--threads", "1", "2"});
  REQUIRE(threads.code == 0);
  CHECK(threads.out.rfind("workers,wall_ms,speedup,identical_front\n", 0) == 0);
  CHECK(threads.out.find(",1\n") != std::string::npos);

  CHECK(run({"bench", "--n-grid", "100", "--mu-grid", "0.1", "--min-community", "200"}).code == 3);
}

TEST_CASE("oracle") {
  auto g = write_file("two_cliques.txt",
                      "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n");
  auto r = run({"oracle", g});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  bool split = false;
  for (const auto& p : j["front"])
    split = split || p["labels"] == json::array({0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(split);

  CHECK(run({"oracle", g, "--max-nodes", "6"}).code == 3);
}
