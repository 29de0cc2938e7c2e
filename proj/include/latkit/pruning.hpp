#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Subset of a lattice's elements. The lattice must outlive the mask.
struct ElementMask {
  const Lattice* lattice = nullptr;
  Bitset members;

  ElementMask() = default;
  ElementMask(const Lattice& l, Bitset m) : lattice(&l), members(std::move(m)) {}

  std::size_t count() const { return members.count(); }
  bool contains(std::size_t e) const { return members.test(e); }
  std::string to_string() const { return members.to_string(); }
};

// Throws NotMaximalJIError unless alpha is a maximal join-irreducible of l.
void require_maximal_ji(const Lattice& l, std::size_t alpha);

struct Pruned {
  ElementMask l_alpha;  // {b : not alpha <= b}
  ElementMask x_alpha;  // {b : alpha <= b}
};
Pruned prune(const Lattice& l, std::size_t alpha);

struct PairWitness {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

// First pair (a <= b by index) of members whose join or meet leaves the mask.
std::optional<PairWitness> sublattice_violation(const ElementMask& m);
inline bool is_sublattice(const ElementMask& m) { return !sublattice_violation(m); }

// a v b = theta and a ^ b = delta with theta, delta in the mask but a or b
// outside it. The lexicographically least (theta, delta, a, b) is reported.
struct EmbeddingWitness {
  std::size_t theta;
  std::size_t delta;
  std::size_t a;
  std::size_t b;
  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

// Throws NotASublatticeError if m is not a sublattice.
std::optional<EmbeddingWitness> embedding_violation(const ElementMask& m);
inline bool is_embedded_sublattice(const ElementMask& m) { return !embedding_violation(m); }

// Counting restricted to the pruned sublattice, plus h(d) = |{b : alpha <= b <= d}|.
struct RestrictedCounts {
  std::vector<std::size_t> s_alpha;
  std::vector<std::size_t> l_alpha;
  std::vector<std::size_t> h;
};
RestrictedCounts restricted_counts(const Lattice& l, std::size_t alpha);

// The unique join-irreducible e with delta v e = theta, for a cover
// delta < theta of a distributive lattice. Throws NotACoverError or
// NotDistributiveError.
std::size_t cover_irreducible(const Lattice& l, std::size_t theta, std::size_t delta);
// Same, without the distributivity check, against a precomputed form.
std::size_t cover_irreducible(const Lattice& l, const BirkhoffForm& bf, std::size_t theta,
                              std::size_t delta);

// C_gamma = {x in L_alpha : x v alpha = gamma} for gamma in X_alpha, with its
// maximum x_gamma.
struct JoinClass {
  std::size_t gamma;
  ElementMask members;
  std::size_t top;
};

// Requires a distributive lattice and a maximal join-irreducible alpha.
// Throws EmptyClassError if some class is empty.
std::vector<JoinClass> c_classes(const Lattice& l, std::size_t alpha);

struct IdentityResult {
  std::string id;
  bool passed;
  std::string witness;  // empty on pass
};

struct DecompositionReport {
  std::size_t alpha = 0;
  ElementMask l_alpha_mask;
  ElementMask x_alpha_mask;
  RestrictedCounts restricted;
  struct Class {
    std::size_t gamma;
    ElementMask members;
    std::optional<std::size_t> top;  // absent when no unique maximum exists
  };
  std::vector<Class> classes;  // one per element of X_alpha, ascending gamma
  std::int64_t S_alpha = 0;
  std::int64_t T_alpha = 0;
  std::int64_t I = 0;
  std::vector<IdentityResult> lemmas;  // ids "a".."i"
  std::vector<IdentityResult> checks;  // structural checks on the sub-structures

  bool passed() const;
};

// Throws NotDistributiveError or NotMaximalJIError when preconditions fail.
DecompositionReport decomposition_report(const Lattice& l, std::size_t alpha);

// Plain-text form used by the CLI.
std::string format_report(const DecompositionReport& r);

namespace detail {
// Evaluates every identity without checking preconditions; alpha must be a
// valid element index. Used to exercise failure reporting.
DecompositionReport evaluate_decomposition(const Lattice& l, std::size_t alpha);
}  // namespace detail

}  // namespace latkit
