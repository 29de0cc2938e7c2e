#include "latkit/lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "latkit/errors.hpp"
#include "latkit/random.hpp"

namespace latkit {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string list_str(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + "}";
}

// Greatest element of `set` w.r.t. the order whose principal down-sets are
// `down`, if one exists.
std::optional<std::size_t> greatest(const Bitset& set, const std::vector<Bitset>& down) {
  std::size_t best = set.size();
  std::size_t best_count = 0;
  set.for_each([&](std::size_t g) {
    const std::size_t c = down[g].count();
    if (best == set.size() || c > best_count) {
      best = g;
      best_count = c;
    }
  });
  if (best == set.size() || !set.is_subset_of(down[best])) return std::nullopt;
  return best;
}

std::vector<std::size_t> maximal_members(const Bitset& set, const std::vector<Bitset>& up) {
  std::vector<std::size_t> out;
  set.for_each([&](std::size_t g) {
    if ((up[g] & set).count() == 1) out.push_back(g);
  });
  return out;
}

}  // namespace

void Lattice::finish_covers() {
  const std::size_t n = size();
  lower_.assign(n, {});
  upper_.assign(n, {});
  covers_.clear();
  for (std::size_t d = 0; d < n; ++d) {
    Bitset strictly_above = up_[d];
    strictly_above.reset(d);
    strictly_above.for_each([&](std::size_t u) {
      if ((down_[u] & strictly_above).count() == 1) covers_.push_back({d, u});
    });
  }
  std::sort(covers_.begin(), covers_.end());
  for (const auto& e : covers_) {
    upper_[e.lo].push_back(e.hi);
    lower_[e.hi].push_back(e.lo);
  }
}

Lattice lattice_from_covers(std::size_t n, std::span<const Edge> covers) {
  if (n == 0) throw NotALatticeError(NotALatticeError::Kind::empty, {}, "lattice has no elements");
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : covers) {
    if (e.lo >= n || e.hi >= n)
      throw IndexError("cover " + std::to_string(e.lo) + " < " + std::to_string(e.hi) +
                       " references an element outside [0," + std::to_string(n) + ")");
    if (e.lo == e.hi) throw CycleError("reflexive cover on element " + std::to_string(e.lo));
    succ[e.lo].push_back(e.hi);
    ++indegree[e.hi];
  }

  // Kahn order, smallest index first.
  std::vector<std::size_t> topo;
  topo.reserve(n);
  {
    std::vector<std::size_t> deg = indegree;
    std::vector<std::size_t> ready;
    for (std::size_t i = n; i-- > 0;)
      if (deg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
      std::sort(ready.begin(), ready.end(), std::greater<>());
      const std::size_t v = ready.back();
      ready.pop_back();
      topo.push_back(v);
      for (auto w : succ[v])
        if (--deg[w] == 0) ready.push_back(w);
    }
  }
  if (topo.size() != n) {
    std::vector<std::size_t> stuck;
    std::vector<bool> seen(n, false);
    for (auto v : topo) seen[v] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) stuck.push_back(i);
    throw CycleError("cover relation has a cycle through elements " + list_str(stuck));
  }

  Lattice l;
  l.down_.assign(n, Bitset(n));
  l.up_.assign(n, Bitset(n));
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : succ[v]) pred[w].push_back(v);
  for (auto v : topo) {
    l.down_[v].set(v);
    for (auto u : pred[v]) l.down_[v] |= l.down_[u];
  }
  for (std::size_t v = 0; v < n; ++v) l.down_[v].for_each([&](std::size_t u) { l.up_[u].set(v); });

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Bitset lower = l.down_[a] & l.down_[b];
      if (lower.none()) continue;  // caught by the bottom check below
      auto g = greatest(lower, l.down_);
      if (!g)
        throw NotALatticeError(NotALatticeError::Kind::no_meet, {a, b},
                               "pair " + pair_str(a, b) + " has no unique meet; maximal lower bounds " +
                                   list_str(maximal_members(lower, l.up_)));
      l.meet_[a * n + b] = l.meet_[b * n + a] = *g;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Bitset upper = l.up_[a] & l.up_[b];
      if (upper.none()) continue;
      auto g = greatest(upper, l.up_);  // least element: up_ is the dual down
      if (!g) {
        std::vector<std::size_t> minimal;
        upper.for_each([&](std::size_t u) {
          if ((l.down_[u] & upper).count() == 1) minimal.push_back(u);
        });
        throw NotALatticeError(NotALatticeError::Kind::no_join, {a, b},
                               "pair " + pair_str(a, b) + " has no unique join; minimal upper bounds " +
                                   list_str(minimal));
      }
      l.join_[a * n + b] = l.join_[b * n + a] = *g;
    }

  std::vector<std::size_t> minimal, maximal;
  for (std::size_t v = 0; v < n; ++v) {
    if (l.down_[v].count() == 1) minimal.push_back(v);
    if (l.up_[v].count() == 1) maximal.push_back(v);
  }
  if (minimal.size() != 1)
    throw NotALatticeError(NotALatticeError::Kind::no_bottom, minimal,
                           "no unique bottom; minimal elements " + list_str(minimal));
  if (maximal.size() != 1)
    throw NotALatticeError(NotALatticeError::Kind::no_top, maximal,
                           "no unique top; maximal elements " + list_str(maximal));
  l.bottom_ = minimal.front();
  l.top_ = maximal.front();
  l.finish_covers();
  return l;
}

Lattice lattice_from_ideals(const IdealList& il) {
  const std::size_t n = il.size();
  Lattice l;
  l.down_.assign(n, Bitset(n));
  l.up_.assign(n, Bitset(n));
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const PointMask ma = il.ideals[a], mb = il.ideals[b];
      if ((ma & ~mb) == 0) {
        l.up_[a].set(b);
        l.down_[b].set(a);
      }
      if (b >= a) {
        const std::size_t j = il.index.at(ma | mb);
        const std::size_t m = il.index.at(ma & mb);
        l.join_[a * n + b] = l.join_[b * n + a] = j;
        l.meet_[a * n + b] = l.meet_[b * n + a] = m;
      }
    }
  l.bottom_ = 0;
  l.top_ = n - 1;
  l.finish_covers();
  return l;
}

std::optional<Triple> distributivity_violation(const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return Triple{x, y, z};
  return std::nullopt;
}

void require_distributive(const Lattice& l) {
  if (auto w = distributivity_violation(l))
    throw NotDistributiveError("lattice is not distributive; witness triple (" +
                               std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                               std::to_string((*w)[2]) + ")");
}

Bitset join_irreducibles(const Lattice& l) {
  Bitset out(l.size());
  for (std::size_t a = 0; a < l.size(); ++a)
    if (l.lower_covers(a).size() == 1) out.set(a);
  return out;
}

Bitset maximal_join_irreducibles(const Lattice& l) {
  const Bitset ji = join_irreducibles(l);
  if (ji.none()) throw EmptyError("lattice has no join-irreducible elements");
  Bitset out(l.size());
  ji.for_each([&](std::size_t a) {
    if ((l.up(a) & ji).count() == 1) out.set(a);
  });
  return out;
}

BirkhoffForm birkhoff(const Lattice& l) {
  BirkhoffForm bf;
  bf.j_set = join_irreducibles(l).members();
  const std::size_t k = bf.j_set.size();
  if (k > kMaxPoints)
    throw CapError("lattice has " + std::to_string(k) + " join-irreducibles; limit is " +
                   std::to_string(kMaxPoints));
  std::vector<PointMask> below(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (l.leq(bf.j_set[a], bf.j_set[b])) below[b] |= point_bit(a);
  bf.j_poset = poset_from_relation(k, below);
  std::vector<std::string> labels;
  for (auto e : bf.j_set) labels.push_back("e" + std::to_string(e));
  bf.j_poset.set_labels(std::move(labels));

  bf.ideal_of.assign(l.size(), 0);
  for (std::size_t e = 0; e < l.size(); ++e)
    for (std::size_t a = 0; a < k; ++a)
      if (l.leq(bf.j_set[a], e)) bf.ideal_of[e] |= point_bit(a);
  return bf;
}

std::optional<RoundtripFailure> birkhoff_roundtrip(const Lattice& l) {
  using Kind = RoundtripFailure::Kind;
  require_distributive(l);
  const BirkhoffForm bf = birkhoff(l);
  const std::size_t n = l.size();

  std::unordered_map<PointMask, std::size_t> seen;
  for (std::size_t e = 0; e < n; ++e) {
    if (!is_downset(bf.j_poset, bf.ideal_of[e])) return RoundtripFailure{Kind::not_downset, {e}};
    auto [it, fresh] = seen.emplace(bf.ideal_of[e], e);
    if (!fresh) return RoundtripFailure{Kind::not_injective, {it->second, e}};
  }
  IdealList il;
  try {
    il = downsets(bf.j_poset, n);
  } catch (const ExplosionError&) {
    return RoundtripFailure{Kind::not_surjective, {}};
  }
  if (il.size() != n) return RoundtripFailure{Kind::not_surjective, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (bf.ideal_of[l.join(a, b)] != (bf.ideal_of[a] | bf.ideal_of[b]))
        return RoundtripFailure{Kind::join_not_union, {a, b}};
      if (bf.ideal_of[l.meet(a, b)] != (bf.ideal_of[a] & bf.ideal_of[b]))
        return RoundtripFailure{Kind::meet_not_intersection, {a, b}};
    }
  return std::nullopt;
}

std::optional<Triple> law_violation(const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (l.join(a, a) != a || l.meet(a, a) != a) return Triple{a, a, a};
    for (std::size_t b = 0; b < n; ++b) {
      const bool le = l.leq(a, b);
      if (le != (l.join(a, b) == b) || le != (l.meet(a, b) == a)) return Triple{a, b, b};
      if (l.join(a, b) != l.join(b, a) || l.meet(a, b) != l.meet(b, a)) return Triple{a, b, b};
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) return Triple{a, b, b};
      if (!l.leq(a, l.join(a, b)) || !l.leq(l.meet(a, b), a)) return Triple{a, b, b};
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.join(l.join(a, b), c) != l.join(a, l.join(b, c)) ||
            l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c)))
          return Triple{a, b, c};
  return std::nullopt;
}

std::optional<Triple> join_prime_violation(const Lattice& l, std::size_t exhaustive_limit,
                                           std::size_t samples) {
  const auto ji = join_irreducibles(l).members();
  const std::size_t n = l.size();
  auto bad = [&](std::size_t beta, std::size_t theta, std::size_t delta) {
    return l.leq(beta, l.join(theta, delta)) && !l.leq(beta, theta) && !l.leq(beta, delta);
  };
  if (ji.empty()) return std::nullopt;
  if (n <= exhaustive_limit) {
    for (auto beta : ji)
      for (std::size_t theta = 0; theta < n; ++theta)
        for (std::size_t delta = 0; delta < n; ++delta)
          if (bad(beta, theta, delta)) return Triple{beta, theta, delta};
    return std::nullopt;
  }
  Xorshift64Star rng(n);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t beta = ji[rng.below(ji.size())];
    const std::size_t theta = rng.below(n), delta = rng.below(n);
    if (bad(beta, theta, delta)) return Triple{beta, theta, delta};
  }
  return std::nullopt;
}

}  // namespace latkit
