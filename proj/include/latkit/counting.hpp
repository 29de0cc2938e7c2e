#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// |{b : b <= d}|
std::size_t s_count(const Lattice& l, std::size_t d);
// |{b : b >= d}|
std::size_t l_count(const Lattice& l, std::size_t d);
// Size of the comparability set of d, s(d) + l(d) - 1.
std::size_t f_count(const Lattice& l, std::size_t d);

// Elements comparable to d (including d).
Bitset comparability_set(const Lattice& l, std::size_t d);

struct Sums {
  std::uint64_t lower;  // sum of s
  std::uint64_t upper;  // sum of l
  friend bool operator==(const Sums&, const Sums&) = default;
};
Sums sums(const Lattice& l);

// Number of ordered pairs (a,b) with a <= b, by scanning the full order
// matrix entry by entry. Equal to both sums on any finite poset.
std::uint64_t comparable_pair_count(const Lattice& l);

std::uint64_t noncomparable_pairs_brute(const Lattice& l);
// (|L|^2 - sum f) / 2; throws ParityError if the numerator is odd.
std::uint64_t noncomparable_pairs_formula(const Lattice& l);

// Rank = number of join-irreducibles below d. Distributive lattices only;
// both throw NotDistributiveError otherwise.
std::size_t rank(const Lattice& l, std::size_t d);
std::size_t corank(const Lattice& l, std::size_t d);

struct RankVectors {
  std::vector<std::size_t> rank;
  std::vector<std::size_t> corank;
};
RankVectors ranks(const Lattice& l);
RankVectors ranks(const Lattice& l, const BirkhoffForm& bf);

// Longest chain length from bottom to each element; works on any lattice.
std::vector<std::size_t> heights(const Lattice& l);

struct CountProfile {
  std::vector<std::size_t> s;
  std::vector<std::size_t> l;
  std::vector<std::size_t> f;
  // Empty when the lattice is not distributive.
  std::vector<std::size_t> rank;
  std::vector<std::size_t> corank;
  std::uint64_t lower_sum = 0;
  std::uint64_t upper_sum = 0;
  std::uint64_t n_formula = 0;
  std::uint64_t n_brute = 0;
};

CountProfile count_profile(const Lattice& l);

// One "e<i> s=.. l=.. f=.. rank=.." line per element, then "S=.. L=.. n=..".
std::string format_profile(const CountProfile& p);

}  // namespace latkit
