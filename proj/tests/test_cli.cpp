#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "latkit/cli.hpp"
#include "latkit/io.hpp"

using namespace latkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "latkit");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("latkit_test_" + name);
  std::ofstream(p) << contents;
  return p.string();
}

const std::string kFig1 = fixture::path("paper_fig1.lat");

}  // namespace

TEST_CASE("verify the fixture") {
  const auto r = run({"verify", kFig1});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("sums: S=41 L=41 PASS\n") != std::string::npos);
  CHECK(r.out.find("verdict: PASS\n") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify with generators") {
  CHECK(run({"verify", "--gen", "chain:5"}).code == kExitOk);
  CHECK(run({"verify", "--gen", "grid:3:3"}).code == kExitOk);
  CHECK(run({"verify", "--gen", "random:8:0.4:42"}).code == kExitOk);
  const auto e = run({"verify", "--gen", "enumerate:3"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("enumerate:3: lattices=19 failures=0 PASS") != std::string::npos);
  CHECK(run({"verify", "--gen", "bogus:1"}).code == kExitInputError);
  CHECK(run({"verify"}).code == kExitInputError);
  CHECK(run({"verify", kFig1, "--gen", "chain:2"}).code == kExitInputError);
}

TEST_CASE("verify negative paths") {
  // One cover removed: still a lattice, no longer distributive.
  const auto broken = run({"verify", std::string(LATKIT_FIXTURE_DIR) + "/../tests/data/missing_cover.lat"});
  CHECK(broken.code == kExitCheckFailed);
  CHECK(broken.out.find("distributive: witness=") != std::string::npos);
  CHECK(broken.out.find("verdict: FAIL") != std::string::npos);

  // Cover 2 < 4 removed: element 4 becomes a second minimal element.
  const std::string unbounded = temp_file("unbounded.lat",
                                          "lattice 9\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n3 < 5\n4 < 5\n"
                                          "5 < 6\n5 < 7\n6 < 8\n7 < 8\n");
  const auto r = run({"verify", unbounded});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("minimal elements {0,4}") != std::string::npos);

  CHECK(run({"verify", temp_file("reflexive.lat", "lattice 2\n0 < 0\n")}).code == kExitInputError);
  CHECK(run({"verify", "/nonexistent/file.lat"}).code == kExitInputError);
}

TEST_CASE("verify a poset file through its downset lattice") {
  const auto r = run({"verify", temp_file("diamond.pos", "poset 4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("birkhoff: elements=6 ideals=6 PASS") != std::string::npos);
}

TEST_CASE("stats") {
  const auto r = run({"stats", kFig1});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("e0 s=1 l=9 f=9 rank=0\n") == 0);
  CHECK(r.out.find("e8 s=9 l=1 f=9 rank=5\n") != std::string::npos);
  CHECK(r.out.find("S=41 L=41 n=4\n") != std::string::npos);
}

TEST_CASE("prune") {
  const auto r = run({"prune", kFig1, "--alpha", "7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("S=13 T=-13 I=0\n") != std::string::npos);
  std::size_t passes = 0;
  for (auto pos = r.out.find("lemma "); pos != std::string::npos; pos = r.out.find("lemma ", pos + 1))
    if (r.out.compare(r.out.find(':', pos), 6, ": PASS") == 0) ++passes;
  CHECK(passes == 9);

  CHECK(run({"prune", kFig1, "--alpha", "6"}).out.find("I=0") != std::string::npos);
  const auto bad = run({"prune", kFig1, "--alpha", "3"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("not a maximal join-irreducible") != std::string::npos);
  CHECK(run({"prune", kFig1}).code == kExitInputError);
}

TEST_CASE("fuzz") {
  const auto r = run({"fuzz", "--count", "50", "--size", "6", "--seed", "11"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "fuzz: instances=50 seed=11 failures=0 PASS\n");
  CHECK(run({"fuzz", "--count", "20", "--p", "0.5", "--jobs", "2"}).code == kExitOk);
  CHECK(run({"fuzz", "--p", "2"}).code == kExitInputError);
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--points", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("lattices=19 failures=0 PASS") != std::string::npos);
  CHECK(run({"enumerate", "--points", "6"}).code == kExitInputError);
}

TEST_CASE("render") {
  const auto dot = run({"render", kFig1, "--format", "dot", "--annotate", "both"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.find("digraph lattice {") == 0);
  const auto tikz = run({"render", kFig1, "--format", "tikz", "--annotate", "l"});
  CHECK(tikz.code == kExitOk);
  CHECK(tikz.out.find("\\node (e0) at (0,0) {9};") != std::string::npos);
  CHECK(run({"render", kFig1, "--format", "svg"}).code == kExitInputError);
}

TEST_CASE("downset cap from the environment") {
  ::setenv("LATKIT_CAP", "10", 1);
  const auto r = run({"verify", "--gen", "antichain:5"});
  ::unsetenv("LATKIT_CAP");
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("exceeds cap 10") != std::string::npos);
  CHECK(run({"verify", "--gen", "antichain:5"}).code == kExitOk);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
}
