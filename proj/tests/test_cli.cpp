// Drives the knotcode executable end to end.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef KNOTCODE_CLI
#error "KNOTCODE_CLI must point at the knotcode executable"
#endif

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" KNOTCODE_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect = 0) {
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == expect, args);
  return json::parse(r.out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("knotcode_cli_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen and invariants") {
  TempDir tmp;
  const std::string t = tmp / "t.json", f = tmp / "f.json", s = tmp / "s.json", p = tmp / "p.json";
  REQUIRE(run("gen builtin trefoil -o " + t).code == 0);
  REQUIRE(run("gen builtin figure_eight -o " + f).code == 0);
  REQUIRE(run("gen sum " + t + " " + f + " --arc1 2 --arc2 3 -o " + s).code == 0);
  REQUIRE(run("gen pretzel 3 2 3 5 -o " + p).code == 0);

  json j = run_json("invariants " + s);
  CHECK(j["schema"] == "knotcode.report/1");
  CHECK(j["command"] == "invariants");
  CHECK(j["status"] == "ok");
  CHECK(j["outputs"]["crossings"] == "7");
  CHECK(j["outputs"]["determinant"] == "15");
  CHECK(std::string(j["inputs_digest"]).rfind("fnv1a64:", 0) == 0);

  j = run_json("alex " + p);
  CHECK(j["outputs"]["determinant"] == "123");
  j = run_json("invariants " + p);
  CHECK(j["outputs"]["crossings"] == "13");

  // generated files validate and round trip through the reader
  for (const auto& file : {t, f, s, p}) CHECK(run_json("check " + file)["status"] == "ok");

  REQUIRE(run("gen pretzel -3 5 7 -o " + (tmp / "m.json")).code == 0);
  CHECK(run_json("invariants " + (tmp / "m.json"))["outputs"]["crossings"] == "15");
  REQUIRE(run("gen torus --a 3 --b 4 -o " + (tmp / "k.json")).code == 0);
  CHECK(run_json("alex " + (tmp / "k.json"))["outputs"]["determinant"] == "3");
}

TEST_CASE("code, sum, cable, colorings") {
  TempDir tmp;
  const std::string t = tmp / "t.json";
  REQUIRE(run("gen builtin trefoil -o " + t).code == 0);

  json j = run_json("code " + t + " --q 3 --t -1 --min-dist --weights");
  CHECK(j["outputs"]["k"] == "2");
  CHECK(j["outputs"]["d"] == "2");
  CHECK(j["outputs"]["weights"] == json::array({"1", "0", "6", "2"}));

  j = run_json("code " + t + " --q 4 --modulus 1,1,1 --t alpha --min-dist");
  CHECK(j["outputs"]["k"] == "2");

  j = run_json("sum " + t + " " + t + " --q 3 --t -1 --min-dist");
  CHECK(j["outputs"]["k"] == j["outputs"]["k_diagram"]);
  CHECK(j["outputs"]["k"] == "3");
  CHECK(j["warnings"].empty());

  j = run_json("cable --base " + t + " --pairs 2,3,2,3 --q 3 --t -1");
  CHECK(j["outputs"]["dim"] == "4");
  j = run_json("cable --base-unknot --pairs 2,3 --q 7 --t 3");
  CHECK(j["outputs"]["dim"] == "2");

  j = run_json("colorings " + t + " --mod 9");
  CHECK(j["outputs"]["count"] == "27");
  j = run_json("matrix " + t + " --kind dehn --at -1");
  CHECK(j["outputs"]["cols"] == "5");
}

TEST_CASE("exit codes") {
  TempDir tmp;
  const std::string t = tmp / "t.json";
  REQUIRE(run("gen builtin trefoil -o " + t).code == 0);

  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("code " + t).code == 2);                  // --q missing
  CHECK(run("code " + t + " --q 6").code == 2);       // not a prime power
  CHECK(run("code " + t + " --q 3 --t 0").code == 2);  // t must be a unit
  CHECK(run("invariants " + (tmp / "missing.json")).code == 2);

  std::ofstream(tmp / "junk.json") << "{ nope";
  CHECK(run("invariants " + (tmp / "junk.json")).code == 3);
  json broken = json::parse(std::ifstream(t));
  broken["crossings"][0]["sign"] = -broken["crossings"][0]["sign"].get<int>();
  std::ofstream(tmp / "bad.json") << broken.dump();
  CHECK(run("invariants " + (tmp / "bad.json")).code == 3);

  CHECK(run("check " + (tmp / "bad.json")).code == 3);

  const Run budget = run("code " + t + " --q 3 --min-dist", "KNOTCODE_BUDGET=2");
  CHECK(budget.code == 4);
  const json b = json::parse(budget.out);
  CHECK(b["status"] == "budget");
  CHECK(b["outputs"]["d"] == "unknown");
  CHECK(b["outputs"]["k"] == "2");
  CHECK(run("code " + t + " --q 3 --min-dist --budget 2").code == 4);
}

TEST_CASE("batch mode and determinism") {
  TempDir tmp;
  fs::create_directories(tmp.path / "in");
  REQUIRE(run("gen builtin trefoil -o " + (tmp / "in/a.json")).code == 0);
  REQUIRE(run("gen builtin figure_eight -o " + (tmp / "in/b.json")).code == 0);
  std::ofstream(tmp / "in/c.json") << "[]";

  const Run r = run("invariants --batch " + (tmp / "in"));
  CHECK(r.code == 3);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> rows;
  while (std::getline(lines, line)) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["outputs"]["determinant"] == "3");
  CHECK(rows[1]["outputs"]["determinant"] == "5");
  CHECK(rows[2].contains("error"));
  CHECK(rows[2]["exit_code"] == 3);

  const std::string args = "code " + (tmp / "in/b.json") + " --q 5 --t 2 --min-dist --weights";
  CHECK(run(args).out == run(args).out);
  CHECK(run("invariants --batch " + (tmp / "in")).out == r.out);
}
