#pragma once

// Graphviz rendering of a face-Reeb graph. Vertices are ranked by level and
// labelled with their height; edges carry their face. The half-infinite top
// edges end in a point node drawn above the last level.

#include <sstream>
#include <string>

#include "phylolattice/detail/format.hpp"
#include "phylolattice/reeb.hpp"

namespace phylolattice {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline std::string reeb_to_dot(const ReebGraph& g) {
  std::ostringstream out;
  out << "graph reeb {\n  rankdir=BT;\n  node [shape=circle, width=0.2, fontsize=10];\n";
  for (std::size_t level = 0; level < g.criticals().size(); ++level) {
    out << "  { rank=same;";
    for (std::size_t v : g.vertices_at(level)) out << " v" << v << ";";
    out << " }\n";
  }
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    out << "  v" << v << " [label=\"" << detail::format_number(g.vertices()[v].height) << "\", height="
        << detail::format_number(g.vertices()[v].height) << "];\n";
  std::size_t tops = 0;
  for (const auto& e : g.edges()) {
    const std::string label = detail::dot_escape(g.taxa().format(e.face));
    if (e.up == ReebEdge::npos) {
      out << "  inf" << tops << " [shape=point, label=\"\"];\n";
      out << "  v" << e.down << " -- inf" << tops++ << " [label=\"" << label << "\", style=dashed];\n";
    } else {
      out << "  v" << e.down << " -- v" << e.up << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace phylolattice
