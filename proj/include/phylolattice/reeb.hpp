#pragma once

// The face-Reeb graph of a gram. With criticals a_1 < ... < a_n:
//   E_i = faces of level i (edges over [a_i, a_{i+1}], the last one over [a_n, inf)),
//   V_i = connected components of the comparability graph on level(i-1) ∪ level(i),
//   down(e) in V_i and up(e) in V_{i+1} are the components containing e.

#include <limits>
#include <map>
#include <vector>

#include "phylolattice/cliquegram.hpp"
#include "phylolattice/face_set.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/mergegram.hpp"

namespace phylolattice {

struct ReebEdge {
  Face face;
  std::size_t level = 0;   // edge lies over [a_level, a_{level+1}]
  std::size_t down = 0;    // vertex id
  std::size_t up = npos;   // vertex id, npos for the half-infinite top edge

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct ReebVertex {
  std::size_t level = 0;
  double height = 0.0;
};

class ReebGraph {
 public:
  ReebGraph(TaxaSet taxa, std::vector<double> criticals, std::vector<ReebVertex> vertices, std::vector<ReebEdge> edges)
      : taxa_(std::move(taxa)), criticals_(std::move(criticals)), vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  const TaxaSet& taxa() const { return taxa_; }
  const std::vector<double>& criticals() const { return criticals_; }
  const std::vector<ReebVertex>& vertices() const { return vertices_; }
  const std::vector<ReebEdge>& edges() const { return edges_; }

  std::vector<std::size_t> vertices_at(std::size_t level) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (vertices_[v].level == level) out.push_back(v);
    return out;
  }

  /// First Betti number of the graph (finite edges only): 0 iff it is a merge tree.
  std::size_t cycle_rank() const {
    detail::DisjointSets sets(vertices_.size());
    std::size_t finite = 0;
    std::size_t merges = 0;
    for (const auto& e : edges_) {
      if (e.up == ReebEdge::npos) continue;
      ++finite;
      if (sets.unite(e.down, e.up)) ++merges;
    }
    return finite - merges;
  }

  bool is_merge_tree() const { return cycle_rank() == 0; }

  /// Chains of edges carrying the same face, read as lifespans. Equals the
  /// labeled mergegram of the gram.
  LabeledMergegram face_intervals() const {
    std::map<Face, Interval> spans;
    for (const auto& e : edges_) {
      const double lo = criticals_[e.level];
      const double hi = e.up == ReebEdge::npos ? kInfinity : criticals_[e.level + 1];
      auto [it, inserted] = spans.emplace(e.face, Interval{lo, hi});
      if (!inserted) {
        it->second.birth = std::min(it->second.birth, lo);
        it->second.death = std::max(it->second.death, hi);
      }
    }
    std::vector<LabeledInterval> out;
    for (const auto& [f, i] : spans) out.push_back({f, i});
    return LabeledMergegram(taxa_, std::move(out));
  }

 private:
  TaxaSet taxa_;
  std::vector<double> criticals_;
  std::vector<ReebVertex> vertices_;
  std::vector<ReebEdge> edges_;
};

inline ReebGraph face_reeb_graph(const Gram& g) {
  const auto& levels = g.levels();
  const std::size_t n = levels.size();
  std::vector<ReebVertex> vertices;
  // component_of[i][face] = vertex id in V_i for faces of level(i-1) ∪ level(i).
  std::vector<std::map<Face, std::size_t>> component_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Face> nodes;
    if (i > 0) nodes.assign(levels[i - 1].faces.begin(), levels[i - 1].faces.end());
    for (const auto& f : levels[i].faces)
      if (i == 0 || !levels[i - 1].faces.contains(f)) nodes.push_back(f);
    detail::DisjointSets sets(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        if (nodes[a].is_subset_of(nodes[b]) || nodes[b].is_subset_of(nodes[a])) sets.unite(a, b);
    std::map<std::size_t, std::size_t> root_to_vertex;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const std::size_t r = sets.find(a);
      auto [it, inserted] = root_to_vertex.emplace(r, vertices.size());
      if (inserted) vertices.push_back({i, levels[i].t});
      component_of[i][nodes[a]] = it->second;
    }
  }
  std::vector<ReebEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& f : levels[i].faces) {
      ReebEdge e{f, i, component_of[i].at(f), ReebEdge::npos};
      if (i + 1 < n) e.up = component_of[i + 1].at(f);
      edges.push_back(e);
    }
  return ReebGraph(g.taxa(), g.criticals(), std::move(vertices), std::move(edges));
}

}  // namespace phylolattice
