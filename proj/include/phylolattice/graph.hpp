#pragma once

// Simple undirected graphs over taxon indices, maximal-clique enumeration,
// and the clique-set lattice built on top of them.

#include <algorithm>
#include <span>
#include <vector>

#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/face_set.hpp"

namespace phylolattice {

class Graph {
 public:
  Graph() = default;

  void add_vertex(std::size_t v) {
    vertices_.insert(v);
    if (adjacency_.size() <= v) adjacency_.resize(v + 1);
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    add_vertex(u);
    add_vertex(v);
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }

  const Face& vertices() const { return vertices_; }

  const Face& neighbours(std::size_t v) const {
    static const Face kNone;
    return v < adjacency_.size() ? adjacency_[v] : kNone;
  }

  bool has_edge(std::size_t u, std::size_t v) const { return neighbours(u).contains(v); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += a.size();
    return twice / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_) return false;
    bool same = true;
    a.vertices_.for_each([&](std::size_t v) { same = same && a.neighbours(v) == b.neighbours(v); });
    return same;
  }

 private:
  Face vertices_;
  std::vector<Face> adjacency_;
};

namespace detail {

// Bron–Kerbosch with Tomita pivoting: the pivot maximizes |P ∩ N(u)| over P ∪ X.
inline void bron_kerbosch(const Graph& g, Face r, Face p, Face x, std::vector<Face>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  (p | x).for_each([&](std::size_t u) {
    const std::size_t k = (p & g.neighbours(u)).size();
    if (!have_pivot || k > best) {
      pivot = u;
      best = k;
      have_pivot = true;
    }
  });
  const Face candidates = p - g.neighbours(pivot);
  candidates.for_each([&](std::size_t v) {
    Face rv = r;
    rv.insert(v);
    const Face& nv = g.neighbours(v);
    bron_kerbosch(g, rv, p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace detail

/// All maximal cliques of `g`; isolated vertices give singleton cliques.
inline std::vector<Face> maximal_cliques(const Graph& g) {
  std::vector<Face> out;
  if (g.vertices().empty()) return out;  // otherwise the empty clique would be reported
  detail::bron_kerbosch(g, Face{}, g.vertices(), Face{}, out);
  return out;
}

/// A face-set that additionally satisfies the pairwise-cover closure: any set
/// whose pairs are each covered by some clique is itself covered by a clique.
/// Equivalently, the set of maximal cliques of some graph.
class CliqueSet {
 public:
  CliqueSet() = default;

  /// Validates the closure condition; throws ValidationError otherwise.
  static CliqueSet from_faceset(FaceSet faces);

  /// Trusted path for sets produced by maximal-clique enumeration.
  static CliqueSet from_maximal_cliques(std::vector<Face> cliques) {
    CliqueSet c;
    c.faces_ = FaceSet::from_antichain(std::move(cliques));
    return c;
  }

  const FaceSet& faces() const { return faces_; }
  operator const FaceSet&() const { return faces_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const CliqueSet&, const CliqueSet&) = default;

 private:
  FaceSet faces_;
};

/// Vertices = union of the faces, edges = pairs sharing a face. Also the
/// 1-skeleton of the complex generated by an arbitrary face-set.
inline Graph graph_from_faces(const FaceSet& faces) {
  Graph g;
  for (const auto& f : faces) {
    const auto m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      g.add_vertex(m[i]);
      for (std::size_t j = i + 1; j < m.size(); ++j) g.add_edge(m[i], m[j]);
    }
  }
  return g;
}

inline Graph graph_from_cliqueset(const CliqueSet& c) { return graph_from_faces(c.faces()); }

inline CliqueSet cliqueset_from_graph(const Graph& g) { return CliqueSet::from_maximal_cliques(maximal_cliques(g)); }

/// Pairwise-cover closure check for an antichain.
inline bool validate_cliqueset(const FaceSet& f) {
  return FaceSet::from_antichain(maximal_cliques(graph_from_faces(f))) == f;
}

inline CliqueSet CliqueSet::from_faceset(FaceSet faces) {
  if (!validate_cliqueset(faces))
    throw ValidationError("face-set is not a clique-set: some pairwise-covered set lies in no clique");
  CliqueSet c;
  c.faces_ = std::move(faces);
  return c;
}

/// Maximal cliques of the 1-skeleton of the complex generated by `faces`.
inline CliqueSet clique_closure(const FaceSet& faces) { return cliqueset_from_graph(graph_from_faces(faces)); }

/// Join in the clique-set lattice: maximal cliques of the union graph.
inline CliqueSet cliqueset_join(std::span<const CliqueSet> parts) {
  if (parts.empty()) throw std::invalid_argument("cliqueset_join: empty list of clique-sets");
  if (parts.size() == 1) return parts.front();
  std::vector<FaceSet> faces;
  faces.reserve(parts.size());
  for (const auto& p : parts) faces.push_back(p.faces());
  return clique_closure(faceset_join(faces));
}

inline CliqueSet cliqueset_join(const CliqueSet& a, const CliqueSet& b) {
  const CliqueSet parts[] = {a, b};
  return cliqueset_join(std::span<const CliqueSet>(parts));
}

}  // namespace phylolattice
