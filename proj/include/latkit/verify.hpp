#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latkit/generators.hpp"
#include "latkit/lattice.hpp"
#include "latkit/poset.hpp"

namespace latkit {

struct Check {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;

  // True iff every check passed; a skipped check counts as not passed.
  bool passed() const;
  const Check* find(const std::string& name) const;
  // "<name>: <detail> PASS|FAIL|SKIP", one line per check.
  std::string format() const;
};

struct VerifyOptions {
  std::size_t join_prime_exhaustive_limit = 64;
};

// The full battery: lattice laws, distributivity, Birkhoff round-trip, both
// sums and the double-counting oracle, noncomparable pairs, comparability
// sets, ranks, both join lemmas, and the decomposition for every maximal
// join-irreducible.
VerifyReport verify_lattice(const Lattice& l, const VerifyOptions& options = {});

// Battery on the downset lattice of p.
VerifyReport verify_poset(const Poset& p, std::size_t cap = kDefaultIdealCap,
                          const VerifyOptions& options = {});

// Greedy shrinking: delete the lowest-index point whose removal keeps
// `fails` true, and repeat until no single deletion does.
Poset shrink_poset(const Poset& p, const std::function<bool(const Poset&)>& fails);

struct FuzzOptions {
  std::size_t count = 1000;
  std::size_t max_size = 8;
  std::optional<double> p;  // unset: cycle 0.2, 0.4, 0.6
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t cap = kDefaultIdealCap;
};

// Instance i: st = seed + i; instance seed = splitmix64(st); point count
// = 1 + splitmix64(st) % max_size (second step); p as given or cycled by i.
GenSpec fuzz_instance_spec(const FuzzOptions& options, std::size_t index);

struct FuzzFailure {
  std::size_t index;
  GenSpec spec;
  VerifyReport report;
  Poset shrunk;
};

struct FuzzResult {
  std::size_t instances = 0;
  std::vector<FuzzFailure> failures;  // ascending index
};

// `check` defaults to verify_poset(...).passed(); injectable for testing
// the failure path.
FuzzResult run_fuzz(const FuzzOptions& options,
                    const std::function<bool(const Poset&)>& check = {});

}  // namespace latkit
