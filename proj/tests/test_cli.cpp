#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hompoly-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  fs::path out = scratch() / "stdout";
  fs::path err = scratch() / "stderr";
  std::string cmd = std::string("'") + HOMPOLY_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" +
                    err.string() + "'";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("verify exit codes") {
  Run even = run("verify --lemma cycles-even --n 4");
  CHECK(even.code == 0);
  CHECK(even.out.find("PASS") != std::string::npos);

  fs::path report = scratch() / "trees.json";
  Run trees = run("verify --lemma tree-matching --target k4 --out '" + report.string() + "'");
  CHECK(trees.code == 0);
  auto j = parse(slurp(report));
  CHECK(j["all_equal"] == true);
  CHECK(j["reports"][0]["counts"]["surviving_trees"] == 3);
  CHECK(j["reports"][0]["parameters"]["target"] == "k4");

  CHECK(run("verify --lemma genus-block").code == 0);
  Run unknown = run("verify --lemma no-such-lemma");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown lemma") != std::string::npos);
  CHECK(run("verify").code == 2);
  CHECK(run("verify --lemma cycles-loop --n seven").code == 2);
  CHECK(run("verify --lemma cycles-loop --jobs 0").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("graph files") {
  fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\"n\": 3, \"edges\": [[0, 1], [1,";
  CHECK(run("classify --h '" + bad.string() + "' --class cycle").code == 2);
  fs::path dup = scratch() / "dup.json";
  std::ofstream(dup) << R"({"n": 3, "edges": [[0, 1], [1, 0]]})";
  CHECK(run("classify --h '" + dup.string() + "' --class cycle").code == 2);
  fs::path good = scratch() / "p3.json";
  std::ofstream(good) << R"({"n": 3, "edges": [[0, 1], [1, 2]]})";
  Run ok = run("classify --h '" + good.string() + "' --class clique");
  CHECK(ok.code == 0);
  CHECK(parse(ok.out)["complexity"] == "VAC0");
  CHECK(run("classify --h missing.json --class cycle").code == 2);
}

TEST_CASE("classify and poly") {
  Run c = run("classify --h loop --class tree");
  CHECK(c.code == 0);
  auto j = parse(c.out);
  CHECK(j["complexity"] == "VNPComplete");
  CHECK_FALSE(j["caveat"].is_null());
  CHECK(run("classify --h k2 --class matching").code == 2);
  CHECK(run("classify --h k2 --class hexagonal").code == 2);

  Run p = run("poly --h k2 --class cycle --n 5");
  CHECK(p.code == 0);
  CHECK(parse(p.out).size() == 15);
  CHECK(p.err == "15 terms\n");
  Run loop = run("poly --h loop --class cycle --n 4");
  CHECK(parse(loop.out).size() == 7);
  Run ev = run("poly --h k2 --class tree --n 2 --model edge-vertex");
  CHECK(ev.code == 0);
  CHECK(parse(ev.out)[0]["vars"].size() == 3);
  Run budget = run("poly --h loop --class planar --n 6 --budget 10");
  CHECK(budget.code == 2);
  CHECK(budget.err.find("budget exceeded") != std::string::npos);
}

TEST_CASE("genus") {
  Run k5 = run("genus --h k5");
  CHECK(k5.code == 0);
  CHECK(parse(k5.out)["genus"] == 1);
  Run chain = run("genus --k 2");
  CHECK(chain.code == 0);
  auto j = parse(chain.out);
  CHECK(j["embedding_genus"] == 2);
  CHECK(j["certified"] == true);
  CHECK(j["graph"]["n"] == 15);
  CHECK(run("genus --k 0").code == 2);
}

TEST_CASE("reports are byte-stable across job counts") {
  const std::string lemmas =
      "--lemma cycles-loop --lemma cycles-even --lemma cycles-bipartite --lemma clique-vac0 --lemma tree-matching "
      "--lemma classify --lemma interpolation --lemma bipartite-certificates";
  fs::path one = scratch() / "one.json";
  fs::path four = scratch() / "four.json";
  Run a = run("report " + lemmas + " --jobs 1 --out '" + one.string() + "'");
  Run b = run("report " + lemmas + " --jobs 4 --out '" + four.string() + "'");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  std::string x = slurp(one);
  CHECK_FALSE(x.empty());
  CHECK(x == slurp(four));
  CHECK(parse(x)["reports"].size() == 8);
  Run again = run("report " + lemmas + " --jobs 3");
  CHECK(again.out == x);
}
