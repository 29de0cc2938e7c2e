#pragma once

#include <string>
#include <vector>

#include "latkit/generators.hpp"
#include "latkit/io.hpp"
#include "latkit/lattice.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(LATKIT_FIXTURE_DIR) + "/" + name; }

// Nodes n1..n9 are elements 0..8.
inline latkit::Lattice fig1() { return latkit::parse_lattice(latkit::read_text_file(path("paper_fig1.lat"))); }

// 0 < a < b < 1, 0 < c < 1 with a=1, b=2, c=3, top=4.
inline latkit::Lattice n5() {
  const std::vector<latkit::Edge> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return latkit::lattice_from_covers(5, covers);
}

// Three atoms 1,2,3 between 0 and 4.
inline latkit::Lattice m3() {
  const std::vector<latkit::Edge> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return latkit::lattice_from_covers(5, covers);
}

// Elements: 0 = {}, 1 = {a}, 2 = {b}, 3 = {a,b}.
inline latkit::Lattice b2() { return latkit::downset_lattice(latkit::antichain(2)); }

inline latkit::Lattice chain_lattice(std::size_t n) {
  std::vector<latkit::Edge> covers;
  for (std::size_t i = 1; i < n; ++i) covers.push_back({i - 1, i});
  return latkit::lattice_from_covers(n, covers);
}

}  // namespace fixture
