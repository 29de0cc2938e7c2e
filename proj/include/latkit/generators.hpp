#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit {

Poset chain(std::size_t n);
Poset antichain(std::size_t n);
// The k-point antichain; its downset lattice is the Boolean lattice B_k.
Poset boolean(std::size_t k);
// Product order of an a-chain and a b-chain; point (i,j) has index i*b + j.
Poset grid(std::size_t a, std::size_t b);

// Each forward pair (i,j), i<j in point order, is a relation independently
// with probability p, decided by one Xorshift64Star::next_double() < p draw
// per pair in (i, then j) lexicographic order from a generator seeded with
// `seed`; the result is the transitive closure.
Poset random_poset(std::size_t n, double p, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumeratePoints = 5;

// Calls `visit` once per labeled partial order on n points (n <= 5, else
// CapError). Isomorphic copies are all visited.
void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_posets(std::size_t n);

struct GenSpec {
  enum class Kind { chain, antichain, boolean, grid, random, enumerate };
  Kind kind = Kind::chain;
  std::vector<std::size_t> sizes;
  double p = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

// "chain:5", "antichain:3", "boolean:3", "grid:2:3", "random:8:0.4:42",
// "enumerate:4". Throws ParseError (line 1) on malformed input.
GenSpec parse_gen_spec(std::string_view text);
std::string to_string(const GenSpec& spec);

// All posets described by the spec; a single one except for enumerate.
std::vector<Poset> generate(const GenSpec& spec);

}  // namespace latkit
