#include "latkit/pruning.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "latkit/counting.hpp"
#include "latkit/errors.hpp"

namespace latkit {

namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

IdentityResult pass(std::string id) { return {std::move(id), true, {}}; }
IdentityResult fail(std::string id, std::string witness) {
  return {std::move(id), false, std::move(witness)};
}

std::string lhs_rhs(std::int64_t lhs, std::int64_t rhs) {
  return "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
}

std::string at_delta(std::size_t d, std::int64_t lhs, std::int64_t rhs) {
  return "delta=" + std::to_string(d) + " " + lhs_rhs(lhs, rhs);
}

// Members of `m` with no strictly larger member.
std::vector<std::size_t> maximal_in(const Lattice& l, const Bitset& m) {
  std::vector<std::size_t> out;
  m.for_each([&](std::size_t x) {
    if ((l.up(x) & m).count() == 1) out.push_back(x);
  });
  return out;
}

}  // namespace

void require_maximal_ji(const Lattice& l, std::size_t alpha) {
  if (alpha >= l.size())
    throw NotMaximalJIError("element " + std::to_string(alpha) + " is out of range");
  Bitset maximal;
  try {
    maximal = maximal_join_irreducibles(l);
  } catch (const EmptyError&) {
    throw NotMaximalJIError("lattice has no join-irreducibles");
  }
  if (!maximal.test(alpha))
    throw NotMaximalJIError("element " + std::to_string(alpha) +
                            " is not a maximal join-irreducible; candidates " + maximal.to_string());
}

Pruned prune(const Lattice& l, std::size_t alpha) {
  require_maximal_ji(l, alpha);
  return {ElementMask(l, ~l.up(alpha)), ElementMask(l, l.up(alpha))};
}

std::optional<PairWitness> sublattice_violation(const ElementMask& m) {
  const Lattice& l = *m.lattice;
  const auto members = m.members.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const std::size_t a = members[i], b = members[j];
      if (!m.contains(l.join(a, b)) || !m.contains(l.meet(a, b))) return PairWitness{a, b};
    }
  return std::nullopt;
}

std::optional<EmbeddingWitness> embedding_violation(const ElementMask& m) {
  if (auto w = sublattice_violation(m))
    throw NotASublatticeError("mask " + m.to_string() + " is not closed on pair (" +
                              std::to_string(w->a) + "," + std::to_string(w->b) + ")");
  const Lattice& l = *m.lattice;
  std::optional<EmbeddingWitness> best;
  auto key = [](const EmbeddingWitness& w) { return std::array{w.theta, w.delta, w.a, w.b}; };
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (m.contains(a) && m.contains(b)) continue;
      const std::size_t theta = l.join(a, b), delta = l.meet(a, b);
      if (!m.contains(theta) || !m.contains(delta)) continue;
      EmbeddingWitness w{theta, delta, a, b};
      if (!best || key(w) < key(*best)) best = w;
    }
  return best;
}

RestrictedCounts restricted_counts(const Lattice& l, std::size_t alpha) {
  require_maximal_ji(l, alpha);
  const Bitset pruned = ~l.up(alpha);
  RestrictedCounts rc;
  const std::size_t n = l.size();
  rc.s_alpha.resize(n);
  rc.l_alpha.resize(n);
  rc.h.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    rc.s_alpha[d] = (l.down(d) & pruned).count();
    rc.l_alpha[d] = (l.up(d) & pruned).count();
    rc.h[d] = (l.up(alpha) & l.down(d)).count();
  }
  return rc;
}

std::size_t cover_irreducible(const Lattice& l, const BirkhoffForm& bf, std::size_t theta,
                              std::size_t delta) {
  if (theta >= l.size() || delta >= l.size())
    throw NotACoverError("element index out of range");
  const auto& lower = l.lower_covers(theta);
  if (std::find(lower.begin(), lower.end(), delta) == lower.end())
    throw NotACoverError(std::to_string(theta) + " does not cover " + std::to_string(delta));
  const PointMask diff = bf.ideal_of[theta] & ~bf.ideal_of[delta];
  if (std::popcount(diff) != 1)
    throw NotDistributiveError("ideal difference of cover " + std::to_string(delta) + " < " +
                               std::to_string(theta) + " has " +
                               std::to_string(std::popcount(diff)) + " points");
  return bf.element(static_cast<std::size_t>(std::countr_zero(diff)));
}

std::size_t cover_irreducible(const Lattice& l, std::size_t theta, std::size_t delta) {
  require_distributive(l);
  return cover_irreducible(l, birkhoff(l), theta, delta);
}

std::vector<JoinClass> c_classes(const Lattice& l, std::size_t alpha) {
  require_distributive(l);
  const auto [pruned, above] = prune(l, alpha);
  std::vector<JoinClass> out;
  above.members.for_each([&](std::size_t gamma) {
    Bitset members(l.size());
    pruned.members.for_each([&](std::size_t x) {
      if (l.join(x, alpha) == gamma) members.set(x);
    });
    if (members.none()) throw EmptyClassError(gamma);
    const auto tops = maximal_in(l, members);
    if (tops.size() != 1)
      throw Error("class C_" + std::to_string(gamma) + " has " + std::to_string(tops.size()) +
                  " maximal elements");
    out.push_back({gamma, ElementMask(l, std::move(members)), tops.front()});
  });
  return out;
}

bool DecompositionReport::passed() const {
  for (const auto& r : lemmas)
    if (!r.passed) return false;
  for (const auto& r : checks)
    if (!r.passed) return false;
  return true;
}

namespace detail {

DecompositionReport evaluate_decomposition(const Lattice& l, std::size_t alpha) {
  const std::size_t n = l.size();
  DecompositionReport r;
  r.alpha = alpha;
  const Bitset above = l.up(alpha);
  const Bitset pruned = ~above;
  r.l_alpha_mask = ElementMask(l, pruned);
  r.x_alpha_mask = ElementMask(l, above);

  auto& rc = r.restricted;
  rc.s_alpha.resize(n);
  rc.l_alpha.resize(n);
  rc.h.resize(n);
  std::vector<std::int64_t> s(n), lc(n);
  for (std::size_t d = 0; d < n; ++d) {
    s[d] = as_signed(s_count(l, d));
    lc[d] = as_signed(l_count(l, d));
    rc.s_alpha[d] = (l.down(d) & pruned).count();
    rc.l_alpha[d] = (l.up(d) & pruned).count();
    rc.h[d] = (above & l.down(d)).count();
  }

  // Join classes. Index by gamma for the class lookups below.
  std::vector<std::optional<std::size_t>> class_of_gamma(n);
  above.for_each([&](std::size_t gamma) {
    Bitset members(n);
    pruned.for_each([&](std::size_t x) {
      if (l.join(x, alpha) == gamma) members.set(x);
    });
    const auto tops = maximal_in(l, members);
    std::optional<std::size_t> top;
    if (tops.size() == 1) top = tops.front();
    class_of_gamma[gamma] = r.classes.size();
    r.classes.push_back({gamma, ElementMask(l, std::move(members)), top});
  });

  pruned.for_each([&](std::size_t d) { r.S_alpha += lc[d] - s[d]; });
  above.for_each([&](std::size_t d) { r.T_alpha += lc[d] - s[d]; });
  r.I = r.S_alpha + r.T_alpha;

  // (a) split of l over alpha v d.
  {
    IdentityResult res = pass("a");
    for (std::size_t d = 0; d < n && res.passed; ++d) {
      const std::int64_t rhs = as_signed(rc.l_alpha[d]) + lc[l.join(alpha, d)];
      if (lc[d] != rhs) res = fail("a", at_delta(d, lc[d], rhs));
    }
    r.lemmas.push_back(res);
  }
  // (b) split of s.
  {
    IdentityResult res = pass("b");
    for (std::size_t d = 0; d < n && res.passed; ++d) {
      const std::int64_t rhs = as_signed(rc.s_alpha[d] + rc.h[d]);
      if (s[d] != rhs) res = fail("b", at_delta(d, s[d], rhs));
    }
    r.lemmas.push_back(res);
  }
  // (c) h vanishes on the pruned part.
  {
    IdentityResult res = pass("c");
    pruned.for_each([&](std::size_t d) {
      if (res.passed && rc.h[d] != 0) res = fail("c", at_delta(d, as_signed(rc.h[d]), 0));
    });
    r.lemmas.push_back(res);
  }
  std::int64_t join_l_sum = 0;
  pruned.for_each([&](std::size_t d) { join_l_sum += lc[l.join(alpha, d)]; });
  // (d)
  r.lemmas.push_back(r.S_alpha == join_l_sum ? pass("d") : fail("d", lhs_rhs(r.S_alpha, join_l_sum)));
  // (e)
  {
    std::int64_t rhs = 0;
    above.for_each([&](std::size_t d) { rhs -= as_signed(rc.s_alpha[d]); });
    r.lemmas.push_back(r.T_alpha == rhs ? pass("e") : fail("e", lhs_rhs(r.T_alpha, rhs)));
  }
  // (f) s_alpha(d) = s_alpha(x_d) = s(x_d) on X_alpha.
  {
    IdentityResult res = pass("f");
    above.for_each([&](std::size_t d) {
      if (!res.passed) return;
      const auto& cls = r.classes[*class_of_gamma[d]];
      if (!cls.top) {
        res = fail("f", "delta=" + std::to_string(d) + " class has no unique maximum");
        return;
      }
      const std::size_t x = *cls.top;
      const std::int64_t lhs = as_signed(rc.s_alpha[d]);
      const std::int64_t mid = as_signed(rc.s_alpha[x]);
      if (lhs != mid || mid != s[x])
        res = fail("f", "delta=" + std::to_string(d) + " x=" + std::to_string(x) +
                            " s_alpha(delta)=" + std::to_string(lhs) +
                            " s_alpha(x)=" + std::to_string(mid) + " s(x)=" + std::to_string(s[x]));
    });
    r.lemmas.push_back(res);
  }
  std::int64_t weighted = 0;
  for (const auto& c : r.classes) weighted += as_signed(c.members.count()) * lc[c.gamma];
  // (g)
  r.lemmas.push_back(join_l_sum == weighted ? pass("g") : fail("g", lhs_rhs(join_l_sum, weighted)));
  // (h)
  {
    IdentityResult res = pass("h");
    std::int64_t top_sum = 0;
    for (const auto& c : r.classes) {
      if (!c.top) {
        res = fail("h", "gamma=" + std::to_string(c.gamma) + " class has no unique maximum");
        break;
      }
      top_sum += s[*c.top];
    }
    if (res.passed && weighted != top_sum) res = fail("h", lhs_rhs(weighted, top_sum));
    r.lemmas.push_back(res);
  }
  // (i)
  r.lemmas.push_back(r.I == 0 ? pass("i") : fail("i", "I=" + std::to_string(r.I)));

  // Structural checks.
  {
    IdentityResult res = pass("partition");
    Bitset seen(n);
    for (const auto& c : r.classes) {
      if (c.members.members.none()) {
        res = fail("partition", "gamma=" + std::to_string(c.gamma) + " class is empty");
        break;
      }
      if (seen.intersects(c.members.members)) {
        res = fail("partition", "gamma=" + std::to_string(c.gamma) + " overlaps an earlier class");
        break;
      }
      seen |= c.members.members;
    }
    if (res.passed && !(seen == pruned))
      res = fail("partition", "uncovered " + (pruned - seen).to_string());
    r.checks.push_back(res);
  }
  {
    IdentityResult res = pass("class_sublattice");
    for (const auto& c : r.classes) {
      if (c.members.members.none()) continue;
      if (auto w = sublattice_violation(c.members)) {
        res = fail("class_sublattice", "gamma=" + std::to_string(c.gamma) + " pair=(" +
                                           std::to_string(w->a) + "," + std::to_string(w->b) + ")");
        break;
      }
    }
    r.checks.push_back(res);
  }
  {
    IdentityResult res = pass("class_maximum");
    for (const auto& c : r.classes)
      if (!c.top) {
        std::string maxima;
        for (auto x : maximal_in(l, c.members.members))
          maxima += (maxima.empty() ? "" : ",") + std::to_string(x);
        res = fail("class_maximum", "gamma=" + std::to_string(c.gamma) + " maxima={" + maxima + "}");
        break;
      }
    r.checks.push_back(res);
  }
  auto embedded_check = [&](const std::string& id, const ElementMask& m) {
    if (m.members.none()) return pass(id);
    if (auto w = sublattice_violation(m))
      return fail(id, "not a sublattice, pair=(" + std::to_string(w->a) + "," +
                          std::to_string(w->b) + ")");
    if (auto w = embedding_violation(m))
      return fail(id, "theta=" + std::to_string(w->theta) + " delta=" + std::to_string(w->delta) +
                          " a=" + std::to_string(w->a) + " b=" + std::to_string(w->b));
    return pass(id);
  };
  r.checks.push_back(embedded_check("l_alpha_embedded", r.l_alpha_mask));
  r.checks.push_back(embedded_check("x_alpha_embedded", r.x_alpha_mask));
  {
    std::int64_t sum = 0;
    pruned.for_each([&](std::size_t d) { sum += as_signed(rc.l_alpha[d]) - as_signed(rc.s_alpha[d]); });
    r.checks.push_back(sum == 0 ? pass("induction_l_alpha")
                                : fail("induction_l_alpha", "sum=" + std::to_string(sum)));
  }
  {
    std::int64_t sum = 0;
    above.for_each([&](std::size_t d) { sum += lc[d] - as_signed(rc.h[d]); });
    r.checks.push_back(sum == 0 ? pass("induction_x_alpha")
                                : fail("induction_x_alpha", "sum=" + std::to_string(sum)));
  }
  return r;
}

}  // namespace detail

DecompositionReport decomposition_report(const Lattice& l, std::size_t alpha) {
  require_distributive(l);
  require_maximal_ji(l, alpha);
  return detail::evaluate_decomposition(l, alpha);
}

std::string format_report(const DecompositionReport& r) {
  std::ostringstream os;
  os << "alpha=" << r.alpha << '\n';
  os << "L_alpha=" << r.l_alpha_mask.to_string() << '\n';
  os << "X_alpha=" << r.x_alpha_mask.to_string() << '\n';
  for (const auto& c : r.classes) {
    os << "C[" << c.gamma << "]=" << c.members.to_string() << " x=";
    if (c.top)
      os << *c.top;
    else
      os << '-';
    os << '\n';
  }
  auto line = [&](const char* kind, const IdentityResult& res) {
    os << kind << ' ' << res.id << ": " << (res.passed ? "PASS" : "FAIL");
    if (!res.passed) os << " witness=" << res.witness;
    os << '\n';
  };
  for (const auto& res : r.lemmas) line("lemma", res);
  for (const auto& res : r.checks) line("check", res);
  os << "note: identity a splits l(d) as l_alpha(d) + l(alpha v d)\n";
  os << "S=" << r.S_alpha << " T=" << r.T_alpha << " I=" << r.I << '\n';
  return os.str();
}

}  // namespace latkit
