#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "latkit/lattice.hpp"
#include "latkit/poset.hpp"

namespace latkit {

// Text formats. A header line `poset <n>` or `lattice <n>`, then one cover
// `<i> < <j>` per line with 0-based indices. `#` starts a comment; blank
// lines are ignored. Failures throw ParseError with line and column; a
// structurally invalid order throws CycleError or NotALatticeError.
Poset parse_poset(std::string_view text);
Lattice parse_lattice(std::string_view text);

// Dispatches on the header keyword.
std::variant<Poset, Lattice> parse_structure(std::string_view text);

std::string serialize(const Poset& p);
std::string serialize(const Lattice& l);

// Throws Error if the file cannot be read.
std::string read_text_file(const std::string& path);

// Lattice described by a file: lattice files as-is, poset files through
// their downset lattice.
Lattice load_lattice(const std::string& path, std::size_t cap = kDefaultIdealCap);

inline Lattice downset_lattice(const Poset& p, std::size_t cap = kDefaultIdealCap) {
  return lattice_from_ideals(downsets(p, cap));
}

}  // namespace latkit
