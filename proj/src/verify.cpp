#include "latkit/verify.hpp"

#include <bit>
#include <sstream>
#include <thread>

#include "latkit/counting.hpp"
#include "latkit/errors.hpp"
#include "latkit/io.hpp"
#include "latkit/pruning.hpp"
#include "latkit/random.hpp"

namespace latkit {

namespace {

using Status = Check::Status;

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string roundtrip_str(const RoundtripFailure& f) {
  std::string what;
  switch (f.kind) {
    case RoundtripFailure::Kind::not_injective: what = "not injective"; break;
    case RoundtripFailure::Kind::not_downset: what = "image is not a downset"; break;
    case RoundtripFailure::Kind::not_surjective: what = "ideal count mismatch"; break;
    case RoundtripFailure::Kind::join_not_union: what = "join is not union"; break;
    case RoundtripFailure::Kind::meet_not_intersection: what = "meet is not intersection"; break;
  }
  for (auto e : f.elements) what += " " + std::to_string(e);
  return what;
}

Check make(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

// Every cover delta < theta has exactly one join-irreducible e with
// delta v e = theta, and it is the point of the ideal difference.
Check join_lemma_check(const Lattice& l, const BirkhoffForm& bf) {
  for (const auto& c : l.covers()) {
    std::size_t count = 0, found = 0;
    for (auto e : bf.j_set)
      if (l.join(c.lo, e) == c.hi) {
        ++count;
        found = e;
      }
    const PointMask diff = bf.ideal_of[c.hi] & ~bf.ideal_of[c.lo];
    if (count != 1 || std::popcount(diff) != 1 ||
        bf.element(static_cast<std::size_t>(std::countr_zero(diff))) != found)
      return make("join_lemma", false,
                  "cover " + std::to_string(c.lo) + "<" + std::to_string(c.hi) + " has " +
                      std::to_string(count) + " irreducible(s)");
  }
  return make("join_lemma", true, "covers=" + std::to_string(l.covers().size()));
}

Check comparability_check(const Lattice& l) {
  for (std::size_t d = 0; d < l.size(); ++d) {
    Bitset gamma(l.size());
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(b, d) || l.leq(d, b)) gamma.set(b);
    if (gamma.count() != s_count(l, d) + l_count(l, d) - 1)
      return make("comparability", false, "f identity fails at " + std::to_string(d));
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b)
        if (gamma.test(a) && gamma.test(b) && (!gamma.test(l.join(a, b)) || !gamma.test(l.meet(a, b))))
          return make("comparability", false,
                      "set of " + std::to_string(d) + " not closed on (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
  }
  return make("comparability", true, "");
}

void decomposition_checks(const Lattice& l, std::vector<Check>& out) {
  Bitset maximal;
  try {
    maximal = maximal_join_irreducibles(l);
  } catch (const EmptyError&) {
    out.push_back(make("decomposition", true, "no join-irreducibles"));
    return;
  }
  maximal.for_each([&](std::size_t alpha) {
    const auto r = decomposition_report(l, alpha);
    std::string detail = "S=" + std::to_string(r.S_alpha) + " T=" + std::to_string(r.T_alpha) +
                         " I=" + std::to_string(r.I);
    for (const auto& res : r.lemmas)
      if (!res.passed) detail += " lemma " + res.id + " witness=" + res.witness;
    for (const auto& res : r.checks)
      if (!res.passed) detail += " check " + res.id + " witness=" + res.witness;
    out.push_back(make("decomposition alpha=" + std::to_string(alpha), r.passed(), detail));
  });
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (c.status != Status::pass) return false;
  return !checks.empty();
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerifyReport::format() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": ";
    if (!c.detail.empty()) os << c.detail << ' ';
    os << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP") << '\n';
  }
  return os.str();
}

VerifyReport verify_lattice(const Lattice& l, const VerifyOptions& options) {
  VerifyReport rep;
  auto& out = rep.checks;

  if (auto w = law_violation(l))
    out.push_back(make("laws", false, "witness=" + triple_str(*w)));
  else
    out.push_back(make("laws", true, ""));

  const auto dist = distributivity_violation(l);
  out.push_back(make("distributive", !dist, dist ? "witness=" + triple_str(*dist) : ""));

  const auto s = sums(l);
  out.push_back(make("sums", s.lower == s.upper,
                     "S=" + std::to_string(s.lower) + " L=" + std::to_string(s.upper)));
  const auto pairs = comparable_pair_count(l);
  out.push_back(make("transpose", pairs == s.lower && pairs == s.upper,
                     "pairs=" + std::to_string(pairs)));
  {
    const auto brute = noncomparable_pairs_brute(l);
    std::string detail;
    bool ok = false;
    try {
      const auto formula = noncomparable_pairs_formula(l);
      ok = formula == brute;
      detail = "formula=" + std::to_string(formula) + " brute=" + std::to_string(brute);
    } catch (const ParityError& e) {
      detail = e.what();
    }
    out.push_back(make("noncomparable", ok, detail));
  }
  out.push_back(comparability_check(l));

  if (dist) {
    for (const char* name : {"birkhoff", "rank", "join_lemma", "join_lemma_2", "decomposition"})
      out.push_back({name, Status::skip, "not distributive"});
    return rep;
  }

  std::optional<BirkhoffForm> bf;
  try {
    bf = birkhoff(l);
    const auto rt = birkhoff_roundtrip(l);
    out.push_back(make("birkhoff", !rt,
                       rt ? roundtrip_str(*rt)
                          : "elements=" + std::to_string(l.size()) +
                                " ideals=" + std::to_string(l.size())));
  } catch (const CapError& e) {
    out.push_back(make("birkhoff", false, e.what()));
    for (const char* name : {"rank", "join_lemma"})
      out.push_back({name, Status::skip, "no Birkhoff form"});
  }
  if (bf) {
    const auto r = ranks(l, *bf);
    const auto h = heights(l);
    std::uint64_t sum_r = 0, sum_cr = 0;
    bool ok = true;
    for (std::size_t d = 0; d < l.size(); ++d) {
      sum_r += r.rank[d];
      sum_cr += r.corank[d];
      ok = ok && r.rank[d] == h[d];
    }
    // The two sums are reported, not compared: they differ whenever the
    // ranks are not symmetric about half the height (e.g. the downsets of
    // the poset 0<2, 1<2).
    out.push_back(make("rank", ok,
                       "sum_rank=" + std::to_string(sum_r) + " sum_corank=" + std::to_string(sum_cr) +
                           (ok ? "" : " rank differs from longest chain")));
    out.push_back(join_lemma_check(l, *bf));
  }
  if (auto w = join_prime_violation(l, options.join_prime_exhaustive_limit))
    out.push_back(make("join_lemma_2", false, "witness=" + triple_str(*w)));
  else
    out.push_back(make("join_lemma_2", true,
                       l.size() <= options.join_prime_exhaustive_limit ? "exhaustive" : "sampled"));

  decomposition_checks(l, out);
  return rep;
}

VerifyReport verify_poset(const Poset& p, std::size_t cap, const VerifyOptions& options) {
  return verify_lattice(downset_lattice(p, cap), options);
}

Poset shrink_poset(const Poset& p, const std::function<bool(const Poset&)>& fails) {
  Poset current = p;
  bool progress = true;
  while (progress && current.size() > 0) {
    progress = false;
    for (std::size_t k = 0; k < current.size(); ++k) {
      Poset candidate = induced_subposet(current, current.all() & ~point_bit(k));
      if (fails(candidate)) {
        current = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return current;
}

GenSpec fuzz_instance_spec(const FuzzOptions& options, std::size_t index) {
  static constexpr double kProfile[] = {0.2, 0.4, 0.6};
  std::uint64_t st = options.seed + index;
  GenSpec g;
  g.kind = GenSpec::Kind::random;
  g.seed = splitmix64(st);
  g.sizes = {1 + static_cast<std::size_t>(splitmix64(st) % std::max<std::size_t>(options.max_size, 1))};
  g.p = options.p ? *options.p : kProfile[index % 3];
  return g;
}

FuzzResult run_fuzz(const FuzzOptions& options, const std::function<bool(const Poset&)>& check) {
  auto passes = [&](const Poset& p) {
    if (check) return check(p);
    return verify_poset(p, options.cap).passed();
  };
  const std::size_t jobs = std::max<std::size_t>(options.jobs, 1);
  std::vector<std::optional<FuzzFailure>> slots(options.count);

  auto worker = [&](std::size_t first) {
    for (std::size_t i = first; i < options.count; i += jobs) {
      const GenSpec spec = fuzz_instance_spec(options, i);
      const Poset p = generate(spec).front();
      if (passes(p)) continue;
      Poset shrunk = shrink_poset(p, [&](const Poset& q) { return !passes(q); });
      slots[i] = FuzzFailure{i, spec, verify_poset(p, options.cap), std::move(shrunk)};
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
  }

  FuzzResult result;
  result.instances = options.count;
  for (auto& s : slots)
    if (s) result.failures.push_back(std::move(*s));
  return result;
}

}  // namespace latkit
