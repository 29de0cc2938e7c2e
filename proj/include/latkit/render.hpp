#pragma once

#include <string>

#include "latkit/lattice.hpp"

namespace latkit {

struct RenderSpec {
  enum class Format { dot, tikz };
  enum class Annotate { s, l, both, none };
  Format format = Format::dot;
  // `both` draws an s-labeled and an l-labeled diagram side by side.
  Annotate annotate = Annotate::both;
};

// Deterministic diagram text, bottom element at the bottom. TikZ nodes sit
// at (index within height level, height), height being the longest chain
// from bottom.
std::string render(const Lattice& l, const RenderSpec& spec);

}  // namespace latkit
