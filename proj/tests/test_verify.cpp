#include <doctest.h>

#include "fixtures.hpp"
#include "latkit/generators.hpp"
#include "latkit/io.hpp"
#include "latkit/verify.hpp"

using namespace latkit;

TEST_CASE("fixture passes the whole battery") {
  const auto rep = verify_lattice(fixture::fig1());
  CHECK(rep.passed());
  const std::string text = rep.format();
  CHECK(text.find("sums: S=41 L=41 PASS\n") != std::string::npos);
  CHECK(text.find("noncomparable: formula=4 brute=4 PASS\n") != std::string::npos);
  CHECK(text.find("transpose: pairs=41 PASS\n") != std::string::npos);
  CHECK(text.find("decomposition alpha=6: S=") != std::string::npos);
  CHECK(text.find("decomposition alpha=7: S=13 T=-13 I=0 PASS\n") != std::string::npos);
  for (const char* name : {"laws", "distributive", "birkhoff", "rank", "join_lemma", "join_lemma_2",
                           "comparability"}) {
    REQUIRE(rep.find(name));
    CHECK(rep.find(name)->status == Check::Status::pass);
  }
}

TEST_CASE("non-distributive lattices fail and list what was skipped") {
  const auto rep = verify_lattice(fixture::n5());
  CHECK_FALSE(rep.passed());
  CHECK(rep.find("distributive")->status == Check::Status::fail);
  CHECK(rep.find("sums")->status == Check::Status::pass);
  CHECK(rep.find("decomposition")->status == Check::Status::skip);
  CHECK(rep.format().find("decomposition: not distributive SKIP\n") != std::string::npos);
}

TEST_CASE("one-element lattice") {
  const auto rep = verify_lattice(fixture::chain_lattice(1));
  CHECK(rep.passed());
  CHECK(rep.find("decomposition")->detail == "no join-irreducibles");
}

TEST_CASE("shrinker") {
  // Failure: "has a 3-chain". Any poset containing one shrinks to it.
  auto has_three_chain = [](const Poset& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t c = 0; c < p.size(); ++c)
          if (a != b && b != c && p.leq(a, b) && p.leq(b, c)) return true;
    return false;
  };
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Poset p = random_poset(8, 0.4, seed);
    if (!has_three_chain(p)) continue;
    const Poset s = shrink_poset(p, has_three_chain);
    CHECK(has_three_chain(s));
    CHECK(s == chain(3));
  }
  CHECK(shrink_poset(chain(4), [](const Poset&) { return true; }).size() == 0);
}

TEST_CASE("fuzz instance specs are reproducible") {
  FuzzOptions o;
  o.seed = 99;
  const auto a = fuzz_instance_spec(o, 17);
  const auto b = fuzz_instance_spec(o, 17);
  CHECK(a == b);
  CHECK(a.kind == GenSpec::Kind::random);
  CHECK(a.sizes[0] >= 1);
  CHECK(a.sizes[0] <= 8);
  CHECK(fuzz_instance_spec(o, 0).p == doctest::Approx(0.2));
  CHECK(fuzz_instance_spec(o, 1).p == doctest::Approx(0.4));
  CHECK(fuzz_instance_spec(o, 2).p == doctest::Approx(0.6));
  o.p = 0.5;
  CHECK(fuzz_instance_spec(o, 2).p == doctest::Approx(0.5));
  // The printed spec alone regenerates the instance.
  CHECK(generate(parse_gen_spec(to_string(a))).front() == generate(a).front());
}

TEST_CASE("fuzz reports and shrinks injected failures") {
  FuzzOptions o;
  o.count = 30;
  o.seed = 5;
  // Pretend that any poset with a comparable pair is a counterexample.
  auto check = [](const Poset& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (a != b && p.leq(a, b)) return false;
    return true;
  };
  const auto result = run_fuzz(o, check);
  CHECK(result.instances == 30);
  REQUIRE_FALSE(result.failures.empty());
  for (std::size_t k = 0; k + 1 < result.failures.size(); ++k)
    CHECK(result.failures[k].index < result.failures[k + 1].index);
  for (const auto& f : result.failures) {
    CHECK_FALSE(check(f.shrunk));
    CHECK(f.shrunk == chain(2));
  }

  o.jobs = 4;
  const auto parallel = run_fuzz(o, check);
  REQUIRE(parallel.failures.size() == result.failures.size());
  for (std::size_t k = 0; k < result.failures.size(); ++k)
    CHECK(parallel.failures[k].index == result.failures[k].index);
}

TEST_CASE("small real fuzz run passes") {
  FuzzOptions o;
  o.count = 60;
  o.seed = 3;
  const auto result = run_fuzz(o);
  CHECK(result.failures.empty());
}
