#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace latkit {

// Points of a poset are packed into a single 64-bit word.
using PointMask = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 20;

// A Hasse edge lo < hi. Used for both posets and lattices.
struct Edge {
  std::size_t lo;
  std::size_t hi;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr PointMask point_bit(std::size_t i) { return PointMask{1} << i; }

// Finite partial order on points 0..n-1. Immutable once built; construct via
// poset_from_covers or poset_from_relation.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return down_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return (down_[j] >> i) & 1u; }
  // {k : k <= i} and {k : i <= k}; both contain i.
  PointMask down(std::size_t i) const { return down_[i]; }
  PointMask up(std::size_t i) const { return up_[i]; }
  PointMask all() const { return size() == 64 ? ~PointMask{0} : point_bit(size()) - 1; }

  // Optional point names; empty or one per point.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Poset& a, const Poset& b) { return a.down_ == b.down_; }

 private:
  friend Poset poset_from_relation(std::size_t, std::span<const PointMask>);
  std::vector<PointMask> down_;
  std::vector<PointMask> up_;
  std::vector<std::string> labels_;
};

// Reflexive-transitive closure of `covers`. Throws IndexError for points
// outside [0,n), CycleError if the closure is not antisymmetric, CapError if
// n exceeds kMaxPoints.
Poset poset_from_covers(std::size_t n, std::span<const Edge> covers);

// Closure of an arbitrary relation given as per-point down masks
// (bit i of below[j] means i <= j). Same errors as poset_from_covers.
Poset poset_from_relation(std::size_t n, std::span<const PointMask> below);

// Restriction of p to the points in `keep`, renumbered in increasing order.
Poset induced_subposet(const Poset& p, PointMask keep);

// Hasse edges, sorted lexicographically.
std::vector<Edge> cover_pairs(const Poset& p);

// Smallest-index-first topological order.
std::vector<std::size_t> linear_extension(const Poset& p);

bool is_downset(const Poset& p, PointMask m);

// All order ideals in canonical (popcount, mask) order.
struct IdealList {
  Poset base;
  std::vector<PointMask> ideals;
  std::unordered_map<PointMask, std::size_t> index;

  std::size_t size() const { return ideals.size(); }
  // Position of `m` in `ideals`; throws IndexError if m is not an ideal.
  std::size_t position(PointMask m) const;
};

bool canonical_less(PointMask a, PointMask b);

// Throws ExplosionError once more than `cap` ideals have been produced.
IdealList downsets(const Poset& p, std::size_t cap = kDefaultIdealCap);

}  // namespace latkit
