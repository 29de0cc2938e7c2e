#include "latkit/poset.hpp"

#include <algorithm>
#include <bit>

#include "latkit/errors.hpp"

namespace latkit {

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size())
    throw IndexError("label count " + std::to_string(labels.size()) +
                     " does not match point count " + std::to_string(size()));
  labels_ = std::move(labels);
}

Poset poset_from_relation(std::size_t n, std::span<const PointMask> below) {
  if (n > kMaxPoints)
    throw CapError("poset has " + std::to_string(n) + " points; limit is " +
                   std::to_string(kMaxPoints));
  if (below.size() != n) throw IndexError("relation size mismatch");
  const PointMask all = n == 64 ? ~PointMask{0} : point_bit(n) - 1;

  std::vector<PointMask> down(below.begin(), below.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (down[j] & ~all)
      throw IndexError("relation references a point outside [0," + std::to_string(n) + ")");
    down[j] |= point_bit(j);
  }
  // Warshall over masks: if k <= j then everything below k is below j.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if ((down[j] >> k) & 1u) down[j] |= down[k];

  Poset p;
  p.down_ = std::move(down);
  p.up_.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (PointMask m = p.down_[j]; m; m &= m - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(m));
      p.up_[i] |= point_bit(j);
    }
  for (std::size_t i = 0; i < n; ++i) {
    const PointMask both = p.down_[i] & p.up_[i] & ~point_bit(i);
    if (both) {
      const auto j = static_cast<std::size_t>(std::countr_zero(both));
      throw CycleError("points " + std::to_string(i) + " and " + std::to_string(j) +
                       " lie on a cycle");
    }
  }
  return p;
}

Poset poset_from_covers(std::size_t n, std::span<const Edge> covers) {
  if (n > kMaxPoints)
    throw CapError("poset has " + std::to_string(n) + " points; limit is " +
                   std::to_string(kMaxPoints));
  std::vector<PointMask> below(n, 0);
  for (const auto& e : covers) {
    if (e.lo >= n || e.hi >= n)
      throw IndexError("cover " + std::to_string(e.lo) + " < " + std::to_string(e.hi) +
                       " references a point outside [0," + std::to_string(n) + ")");
    if (e.lo == e.hi) throw CycleError("reflexive cover on point " + std::to_string(e.lo));
    below[e.hi] |= point_bit(e.lo);
  }
  return poset_from_relation(n, below);
}

Poset induced_subposet(const Poset& p, PointMask keep) {
  keep &= p.all();
  std::vector<std::size_t> kept;
  for (PointMask m = keep; m; m &= m - 1)
    kept.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  std::vector<PointMask> below(kept.size(), 0);
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (p.leq(kept[a], kept[b])) below[b] |= point_bit(a);
  Poset out = poset_from_relation(kept.size(), below);
  if (!p.labels().empty()) {
    std::vector<std::string> labels;
    for (auto k : kept) labels.push_back(p.labels()[k]);
    out.set_labels(std::move(labels));
  }
  return out;
}

std::vector<Edge> cover_pairs(const Poset& p) {
  std::vector<Edge> out;
  const std::size_t n = p.size();
  for (std::size_t j = 0; j < n; ++j) {
    const PointMask strictly_below = p.down(j) & ~point_bit(j);
    for (PointMask m = strictly_below; m; m &= m - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(m));
      // i is covered by j iff nothing strictly below j sits strictly above i.
      const PointMask between = strictly_below & p.up(i) & ~point_bit(i);
      if (!between) out.push_back({i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> linear_extension(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  PointMask placed = 0;
  while (order.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((placed >> i) & 1u) continue;
      if ((p.down(i) & ~point_bit(i) & ~placed) == 0) {
        order.push_back(i);
        placed |= point_bit(i);
        break;
      }
    }
  }
  return order;
}

bool is_downset(const Poset& p, PointMask m) {
  for (PointMask r = m; r; r &= r - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(r));
    if (p.down(j) & ~m) return false;
  }
  return true;
}

bool canonical_less(PointMask a, PointMask b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

std::size_t IdealList::position(PointMask m) const {
  auto it = index.find(m);
  if (it == index.end()) throw IndexError("mask is not an ideal of the base poset");
  return it->second;
}

namespace {

struct IdealWalker {
  const Poset& p;
  const std::vector<std::size_t>& order;
  std::size_t cap;
  std::vector<PointMask>& out;

  void walk(std::size_t k, PointMask mask) {
    if (k == order.size()) {
      if (out.size() == cap) throw ExplosionError(cap);
      out.push_back(mask);
      return;
    }
    walk(k + 1, mask);
    const std::size_t x = order[k];
    // Predecessors of x come earlier in the extension, so they are decided.
    if ((p.down(x) & ~point_bit(x) & ~mask) == 0) walk(k + 1, mask | point_bit(x));
  }
};

}  // namespace

IdealList downsets(const Poset& p, std::size_t cap) {
  IdealList il;
  il.base = p;
  const auto order = linear_extension(p);
  IdealWalker{p, order, cap, il.ideals}.walk(0, 0);
  std::sort(il.ideals.begin(), il.ideals.end(), canonical_less);
  il.index.reserve(il.ideals.size());
  for (std::size_t k = 0; k < il.ideals.size(); ++k) il.index.emplace(il.ideals[k], k);
  return il;
}

}  // namespace latkit
