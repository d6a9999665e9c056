#pragma once

// Network <-> cliquegram correspondence and the treegram of an ultranetwork.

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "phylolattice/detail/parallel.hpp"
#include "phylolattice/face_set.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/graph.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

/// Threshold graph at time t: vertices observed by t, edges coalesced by t.
inline Graph threshold_graph(const PhyloNetwork& n, double t) {
  Graph g;
  const std::size_t k = n.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (n(i, i) > t) continue;
    g.add_vertex(i);
    for (std::size_t j = i + 1; j < k; ++j)
      if (n(i, j) <= t) g.add_edge(i, j);
  }
  return g;
}

/// The cliquegram of a network: at each distinct matrix value, the maximal
/// cliques of the threshold graph. `jobs` > 1 enumerates levels in parallel.
inline Gram cliquegram_from_network(const PhyloNetwork& n, std::size_t jobs = 1) {
  const auto values = n.distinct_values();
  std::vector<GramLevel> levels(values.size());
  detail::parallel_for(values.size(), jobs, [&](std::size_t i) {
    levels[i].t = values[i];
    levels[i].faces = FaceSet::from_antichain(maximal_cliques(threshold_graph(n, values[i])));
  });
  return Gram(n.taxa(), GramKind::cliquegram, std::move(levels));
}

/// N(x,x') = first time x and x' share a face; N(x,x) = first time x appears.
/// Accepts any gram; for facegrams this is the network underlying its 1-skeleton.
inline PhyloNetwork network_from_cliquegram(const Gram& g) {
  const std::size_t k = g.taxa().size();
  std::vector<double> entries(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const double t = g.cover_time(Face{i, j});
      entries[i * k + j] = t;
      entries[j * k + i] = t;
    }
  return PhyloNetwork(g.taxa(), std::move(entries));
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when already joined. The smaller root survives.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// The treegram of an ultranetwork: blocks at time t are the classes of
/// "coalesced by t" among the taxa observed by t.
inline Gram treegram_from_ultranetwork(const Ultranetwork& u) {
  const auto& n = u.network();
  const std::size_t k = n.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(n(i, j), i, j);
  std::sort(pairs.begin(), pairs.end());
  detail::DisjointSets sets(k);
  std::size_t next = 0;
  std::vector<GramLevel> levels;
  for (double t : n.distinct_values()) {
    for (; next < pairs.size() && std::get<0>(pairs[next]) <= t; ++next)
      sets.unite(std::get<1>(pairs[next]), std::get<2>(pairs[next]));
    std::vector<Face> blocks(k);
    for (std::size_t i = 0; i < k; ++i)
      if (n(i, i) <= t) blocks[sets.find(i)].insert(i);
    std::erase_if(blocks, [](const Face& b) { return b.empty(); });
    levels.push_back({t, FaceSet::from_antichain(std::move(blocks))});
  }
  return Gram(n.taxa(), GramKind::treegram, std::move(levels));
}

}  // namespace phylolattice
