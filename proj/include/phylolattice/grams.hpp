#pragma once

// Lattice operations on grams: the filtration <-> facegram correspondence,
// joins in the facegram and cliquegram lattices, and the squash morphism
// from facegrams onto cliquegrams.

#include <algorithm>
#include <span>
#include <string_view>
#include <vector>

#include "phylolattice/cliquegram.hpp"
#include "phylolattice/detail/parallel.hpp"
#include "phylolattice/face_set.hpp"
#include "phylolattice/filtration.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/graph.hpp"

namespace phylolattice {

enum class JoinMode { cliquegram, facegram };

inline std::string_view to_string(JoinMode m) { return m == JoinMode::cliquegram ? "cliquegram" : "facegram"; }

inline Gram facegram_from_filtration(const Filtration& f) { return f.facegram(); }

inline Filtration filtration_from_facegram(const Gram& g) { return Filtration::from_facegram(g); }

/// Least upper bound of grams over a common taxa set. Facegram mode joins the
/// face-sets levelwise; cliquegram mode joins clique-sets (maximal cliques of
/// the union graph) and requires every part to be a cliquegram or treegram.
inline Gram join_grams(std::span<const Gram> parts, JoinMode mode, std::size_t jobs = 1) {
  if (parts.empty()) throw std::invalid_argument("join_grams: empty list of grams");
  for (const auto& p : parts) {
    require_same_universe(parts.front().taxa(), p.taxa(), "join_grams");
    if (mode == JoinMode::cliquegram && p.kind() == GramKind::facegram)
      throw ValidationError("join_grams: cliquegram mode needs cliquegram or treegram parts");
  }
  std::vector<double> times;
  for (const auto& p : parts)
    for (const auto& l : p.levels()) times.push_back(l.t);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  std::vector<GramLevel> levels(times.size());
  detail::parallel_for(times.size(), jobs, [&](std::size_t i) {
    std::vector<FaceSet> current;
    current.reserve(parts.size());
    for (const auto& p : parts) current.push_back(p.at(times[i]));
    FaceSet joined = faceset_join(current);
    levels[i] = {times[i], mode == JoinMode::cliquegram ? clique_closure(joined).faces() : std::move(joined)};
  });
  const bool all_trees = parts.size() == 1 && parts.front().kind() == GramKind::treegram;
  const GramKind kind = all_trees ? GramKind::treegram
                        : mode == JoinMode::cliquegram ? GramKind::cliquegram
                                                       : GramKind::facegram;
  return Gram(parts.front().taxa(), kind, std::move(levels));
}

/// Levelwise maximal cliques of the 1-skeleton of each generated complex.
inline Gram squash_to_cliquegram(const Gram& g) {
  std::vector<GramLevel> levels;
  levels.reserve(g.size());
  for (const auto& l : g.levels()) levels.push_back({l.t, clique_closure(l.faces).faces()});
  return Gram(g.taxa(), g.kind() == GramKind::treegram ? GramKind::treegram : GramKind::cliquegram, std::move(levels));
}

}  // namespace phylolattice
