#include <doctest.h>

#include "fixtures.hpp"
#include "latkit/counting.hpp"
#include "latkit/errors.hpp"
#include "latkit/generators.hpp"
#include "latkit/io.hpp"
#include "latkit/render.hpp"

using namespace latkit;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse the fixture file") {
  const Lattice l = fixture::fig1();
  CHECK(l.size() == 9);
  CHECK(l.covers().size() == 11);
}

TEST_CASE("parse small inputs") {
  const Lattice l = parse_lattice("lattice 2\n0 < 1\n");
  CHECK(l.size() == 2);
  CHECK(l.leq(0, 1));
  const Poset p = parse_poset("# comment\n\nposet 3   # trailing\n0<1\n  1 <2\n");
  CHECK(p == chain(3));
  CHECK(parse_lattice("lattice 1\n").size() == 1);
  CHECK(parse_poset("poset 0\n").size() == 0);
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, std::size_t line, std::size_t column) {
    CAPTURE(text);
    try {
      (void)parse_structure(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect_error("lattice 2\n0 < 0\n", 2, 1);
  expect_error("lattice 2\n0 < 2\n", 2, 5);
  expect_error("lattice 2\n\n0 > 1\n", 3, 3);
  expect_error("graph 2\n", 1, 1);
  expect_error("", 1, 1);
  expect_error("poset 2\n0 < 1 extra\n", 2, 7);
  expect_error("poset x\n", 1, 7);
  CHECK_THROWS_AS(parse_poset("lattice 1\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("poset 1\n"), ParseError);
}

TEST_CASE("structural errors surface after parsing") {
  CHECK_THROWS_AS(parse_poset("poset 2\n0 < 1\n1 < 0\n"), CycleError);
  CHECK_THROWS_AS(parse_lattice("lattice 4\n0 < 2\n0 < 3\n1 < 2\n1 < 3\n"), NotALatticeError);
}

TEST_CASE("serialization is canonical and parse-stable") {
  const std::string messy = "lattice 9\n# shuffled, with a redundant edge\n5 < 7\n0 < 2\n0 < 1\n1 < 3\n"
                            "2 < 3\n2 < 4\n3 < 5\n4 < 5\n5 < 6\n6 < 8\n7 < 8\n0 < 8\n";
  const std::string once = serialize(parse_lattice(messy));
  CHECK(once == serialize(parse_lattice(once)));
  CHECK(once == serialize(fixture::fig1()));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Poset p = random_poset(1 + seed % 9, 0.35, seed);
    const std::string text = serialize(p);
    CHECK(parse_poset(text) == p);
    CHECK(serialize(parse_poset(text)) == text);
  }
}

TEST_CASE("load_lattice accepts both file kinds") {
  CHECK(load_lattice(fixture::path("paper_fig1.lat")).size() == 9);
  CHECK_THROWS_AS(load_lattice(fixture::path("does_not_exist.lat")), Error);
}

TEST_CASE("render dot with both annotations") {
  const Lattice l = fixture::fig1();
  const std::string dot = render(l, {RenderSpec::Format::dot, RenderSpec::Annotate::both});
  CHECK(dot.find("rankdir=BT;") != std::string::npos);
  CHECK(occurrences(dot, "subgraph cluster_") == 2);
  const std::size_t s_vals[] = {1, 2, 2, 4, 3, 6, 7, 7, 9};
  const std::size_t l_vals[] = {9, 6, 7, 5, 5, 4, 2, 2, 1};
  for (std::size_t d = 0; d < 9; ++d) {
    CHECK(dot.find("s" + std::to_string(d) + " [label=\"" + std::to_string(s_vals[d]) + "\"]") !=
          std::string::npos);
    CHECK(dot.find("l" + std::to_string(d) + " [label=\"" + std::to_string(l_vals[d]) + "\"]") !=
          std::string::npos);
  }
  CHECK(occurrences(dot, "[label=") == 18);
  CHECK(occurrences(dot, " -> s") == 11);
  CHECK(occurrences(dot, " -> l") == 11);
  CHECK(dot == render(l, {RenderSpec::Format::dot, RenderSpec::Annotate::both}));
}

TEST_CASE("render small cases") {
  const std::string one = render(fixture::chain_lattice(1), {RenderSpec::Format::dot, RenderSpec::Annotate::none});
  CHECK(occurrences(one, "[label=") == 1);
  CHECK(occurrences(one, "->") == 0);

  const std::string c3 = render(fixture::chain_lattice(3), {RenderSpec::Format::dot, RenderSpec::Annotate::s});
  CHECK(occurrences(c3, "[label=") == 3);
  CHECK(c3.find("e0 -> e1;") != std::string::npos);
  CHECK(c3.find("e1 -> e2;") != std::string::npos);
  CHECK(occurrences(c3, "->") == 2);

  const std::string tikz_one =
      render(fixture::chain_lattice(1), {RenderSpec::Format::tikz, RenderSpec::Annotate::s});
  CHECK(tikz_one.find("\\foreach") == std::string::npos);
}

TEST_CASE("render tikz places nodes by height") {
  const std::string tikz = render(fixture::fig1(), {RenderSpec::Format::tikz, RenderSpec::Annotate::both});
  CHECK(tikz.find("\\begin{tikzpicture}") == 0);
  CHECK(tikz.find("\\node (s0) at (0,0) {1};") != std::string::npos);
  CHECK(tikz.find("\\node (s2) at (1,1) {2};") != std::string::npos);
  CHECK(tikz.find("\\node (s8) at (0,5) {9};") != std::string::npos);
  // Second panel shifted right by the widest level plus two.
  CHECK(tikz.find("\\node (l0) at (4,0) {9};") != std::string::npos);
  CHECK(occurrences(tikz, "\\foreach") == 2);
  CHECK(tikz.find("s0/s1,s0/s2,s1/s3") != std::string::npos);
}
