#pragma once

// Bottleneck progression: how fast the mergegram of a partial join of trees
// approaches the mergegram of the full join.

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "phylolattice/cliquegram.hpp"
#include "phylolattice/detail/format.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/grams.hpp"
#include "phylolattice/mergegram.hpp"
#include "phylolattice/metrics.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

struct ProgressionRow {
  std::size_t k = 0;
  double distance = 0.0;        // d_B(mgm(J_k), mgm(J_l))
  bool below_next = true;       // J_k <= J_{k+1} levelwise (vacuous for k = l)
};

/// J_k = T_1 v ... v T_k, built incrementally (both joins are associative).
inline std::vector<Gram> partial_joins(std::span<const Ultranetwork> trees, JoinMode mode, std::size_t jobs = 1) {
  std::vector<Gram> joins;
  joins.reserve(trees.size());
  for (const auto& t : trees) {
    Gram tree = treegram_from_ultranetwork(t);
    if (joins.empty()) {
      joins.push_back(mode == JoinMode::cliquegram ? std::move(tree) : tree.with_kind(GramKind::facegram));
      continue;
    }
    const Gram parts[] = {joins.back(), std::move(tree)};
    joins.push_back(join_grams(parts, mode, jobs));
  }
  return joins;
}

inline std::vector<ProgressionRow> bottleneck_progression(std::span<const Ultranetwork> trees, JoinMode mode,
                                                          std::size_t jobs = 1) {
  if (trees.empty()) throw ValidationError("bottleneck progression needs at least one tree");
  const auto joins = partial_joins(trees, mode, jobs);
  std::vector<Mergegram> diagrams(joins.size());
  detail::parallel_for(joins.size(), jobs, [&](std::size_t k) { diagrams[k] = mergegram(joins[k]); });
  std::vector<ProgressionRow> rows(joins.size());
  detail::parallel_for(joins.size(), jobs, [&](std::size_t k) {
    rows[k].k = k + 1;
    rows[k].distance = bottleneck_distance(diagrams[k], diagrams.back());
    rows[k].below_next = k + 1 == joins.size() || gram_leq(joins[k], joins[k + 1]);
  });
  return rows;
}

inline std::string progression_csv(const std::vector<ProgressionRow>& rows, std::string_view mode) {
  std::ostringstream out;
  out << "mode,k,bottleneck,monotone\n";
  for (const auto& r : rows)
    out << mode << ',' << r.k << ',' << detail::format_number(r.distance) << ',' << (r.below_next ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace phylolattice
