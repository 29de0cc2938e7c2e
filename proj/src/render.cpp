#include "latkit/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "latkit/counting.hpp"

namespace latkit {

namespace {

struct Panel {
  std::string prefix;  // node id prefix
  std::string title;
  std::vector<std::size_t> labels;  // empty: label with the element index
};

std::vector<Panel> panels_for(const Lattice& l, RenderSpec::Annotate annotate) {
  std::vector<std::size_t> s(l.size()), lv(l.size());
  for (std::size_t d = 0; d < l.size(); ++d) {
    s[d] = s_count(l, d);
    lv[d] = l_count(l, d);
  }
  switch (annotate) {
    case RenderSpec::Annotate::s: return {{"e", "s", s}};
    case RenderSpec::Annotate::l: return {{"e", "l", lv}};
    case RenderSpec::Annotate::both: return {{"s", "s", s}, {"l", "l", lv}};
    case RenderSpec::Annotate::none: break;
  }
  return {{"e", "", {}}};
}

std::string label_of(const Panel& p, std::size_t d) {
  return std::to_string(p.labels.empty() ? d : p.labels[d]);
}

std::string render_dot(const Lattice& l, const std::vector<Panel>& panels) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  const bool clustered = panels.size() > 1;
  const std::string indent = clustered ? "    " : "  ";
  for (const auto& p : panels) {
    if (clustered) {
      os << "  subgraph cluster_" << p.prefix << " {\n";
      os << indent << "label=\"" << p.title << "\";\n";
    }
    for (std::size_t d = 0; d < l.size(); ++d)
      os << indent << p.prefix << d << " [label=\"" << label_of(p, d) << "\"];\n";
    for (const auto& e : l.covers()) os << indent << p.prefix << e.lo << " -> " << p.prefix << e.hi << ";\n";
    if (clustered) os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_tikz(const Lattice& l, const std::vector<Panel>& panels) {
  const auto h = heights(l);
  std::vector<std::size_t> slot(l.size());
  std::vector<std::size_t> level_count(l.size() + 1, 0);
  for (std::size_t d = 0; d < l.size(); ++d) slot[d] = level_count[h[d]]++;
  const std::size_t width = *std::max_element(level_count.begin(), level_count.end());

  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  os << "  [scale=.8,auto=left,every node/.style={circle,fill=blue!20}]\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const auto& p = panels[k];
    const std::size_t offset = k * (width + 2);
    for (std::size_t d = 0; d < l.size(); ++d)
      os << "  \\node (" << p.prefix << d << ") at (" << offset + slot[d] << ',' << h[d] << ") {"
         << label_of(p, d) << "};\n";
  }
  for (const auto& p : panels) {
    if (l.covers().empty()) continue;
    os << "  \\foreach \\from/\\to in {";
    for (std::size_t k = 0; k < l.covers().size(); ++k) {
      const auto& e = l.covers()[k];
      if (k) os << ',';
      os << p.prefix << e.lo << '/' << p.prefix << e.hi;
    }
    os << "}\n    \\draw (\\from) -- (\\to);\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace

std::string render(const Lattice& l, const RenderSpec& spec) {
  const auto panels = panels_for(l, spec.annotate);
  return spec.format == RenderSpec::Format::dot ? render_dot(l, panels) : render_tikz(l, panels);
}

}  // namespace latkit
