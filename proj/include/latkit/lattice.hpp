#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/poset.hpp"

namespace latkit {

// Finite bounded lattice with precomputed order and operation tables.
// Elements are indices 0..size()-1.
class Lattice {
 public:
  std::size_t size() const { return up_.size(); }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }

  // {b : a <= b} and {b : b <= a}.
  const Bitset& up(std::size_t a) const { return up_[a]; }
  const Bitset& down(std::size_t a) const { return down_[a]; }

  // Hasse edges sorted lexicographically.
  const std::vector<Edge>& covers() const { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_[a]; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_[a]; }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  Bitset empty_set() const { return Bitset(size()); }
  Bitset full_set() const {
    Bitset b(size());
    b.set_all();
    return b;
  }

 private:
  friend Lattice lattice_from_covers(std::size_t, std::span<const Edge>);
  friend Lattice lattice_from_ideals(const IdealList&);
  void finish_covers();

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::vector<Edge> covers_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// Builds the lattice whose order is the closure of `covers`; element indices
// are kept as given. Throws CycleError, IndexError, or NotALatticeError with
// a witness. Meets are checked before joins, then bounds.
Lattice lattice_from_covers(std::size_t n, std::span<const Edge> covers);

// Lattice of ideals ordered by inclusion, in the list's canonical order.
Lattice lattice_from_ideals(const IdealList& il);

using Triple = std::array<std::size_t, 3>;

// Lexicographically first (x,y,z) with x^(y v z) != (x^y) v (x^z).
std::optional<Triple> distributivity_violation(const Lattice& l);
inline bool is_distributive(const Lattice& l) { return !distributivity_violation(l); }
void require_distributive(const Lattice& l);

// Elements with exactly one lower cover.
Bitset join_irreducibles(const Lattice& l);
// Throws EmptyError on the one-element lattice.
Bitset maximal_join_irreducibles(const Lattice& l);

struct BirkhoffForm {
  std::vector<std::size_t> j_set;   // join-irreducibles, ascending
  Poset j_poset;                     // point k <-> element j_set[k]
  std::vector<PointMask> ideal_of;   // element -> {k : j_set[k] <= element}

  // Element index behind point k of j_poset.
  std::size_t element(std::size_t point) const { return j_set[point]; }
};

// Throws CapError when the lattice has more than kMaxPoints join-irreducibles.
BirkhoffForm birkhoff(const Lattice& l);

// Why the Birkhoff round-trip failed.
struct RoundtripFailure {
  enum class Kind { not_injective, not_downset, not_surjective, join_not_union, meet_not_intersection };
  Kind kind;
  std::vector<std::size_t> elements;
};

// Throws NotDistributiveError if l is not distributive.
std::optional<RoundtripFailure> birkhoff_roundtrip(const Lattice& l);

// First failure of the lattice laws over the tables: order/operation
// consistency, commutativity, idempotence, absorption (reported as (a,b,b)),
// then associativity (a,b,c).
std::optional<Triple> law_violation(const Lattice& l);

// First (beta, theta, delta) with beta join-irreducible, beta <= theta v delta
// but beta <= neither. Exhaustive while size() <= exhaustive_limit; above that
// `samples` triples are drawn with a fixed-seed generator.
std::optional<Triple> join_prime_violation(const Lattice& l, std::size_t exhaustive_limit = 64,
                                           std::size_t samples = 200000);

}  // namespace latkit
