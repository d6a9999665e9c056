#pragma once

// 0-dimensional persistence of an ultrametric by the elder rule.

#include <algorithm>
#include <tuple>
#include <vector>

#include "phylolattice/cliquegram.hpp"
#include "phylolattice/error.hpp"
#include "phylolattice/mergegram.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

struct PersistencePoint {
  double birth = 0.0;
  double death = kInfinity;

  friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
  friend auto operator<=>(const PersistencePoint& a, const PersistencePoint& b) {
    if (auto c = a.birth <=> b.birth; c != 0) return c;
    return a.death <=> b.death;
  }
};

using PersistenceDiagram = std::vector<PersistencePoint>;

/// Every taxon is born at 0. At each merge of two blocks the younger dies; all
/// blocks are equally old here, so the block holding the smallest taxon index
/// survives. One point (0, inf) remains.
inline PersistenceDiagram ph0_elder(const Ultranetwork& u) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i)
    if (u(i, i) != 0.0) throw ValidationError("ph0_elder: ultrametric must have a zero diagonal");
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(u(i, j), i, j);
  std::sort(pairs.begin(), pairs.end());
  detail::DisjointSets blocks(n);
  PersistenceDiagram out;
  for (const auto& [t, i, j] : pairs)
    if (blocks.unite(i, j)) out.push_back({0.0, t});
  out.push_back({0.0, kInfinity});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace phylolattice
