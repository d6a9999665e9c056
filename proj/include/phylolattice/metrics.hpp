#pragma once

// Distances between mergegrams and between grams over a common taxa set.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "phylolattice/filtration.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/grams.hpp"
#include "phylolattice/mergegram.hpp"

namespace phylolattice {

namespace detail {

// Hopcroft–Karp maximum matching on a bipartite graph given as adjacency lists
// from left vertices to right vertices.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right)
      : adjacency_(left), match_left_(left, kNone), match_right_(right, kNone), dist_(left) {}

  void add_edge(std::size_t l, std::size_t r) { adjacency_[l].push_back(r); }

  std::size_t maximum_matching() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t l = 0; l < adjacency_.size(); ++l)
        if (match_left_[l] == kNone && dfs(l)) ++size;
    }
    return size;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::size_t kFar = static_cast<std::size_t>(-1);

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < adjacency_.size(); ++l) {
      if (match_left_[l] == kNone) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kFar;
      }
    }
    while (!q.empty()) {
      const std::size_t l = q.front();
      q.pop();
      for (std::size_t r : adjacency_[l]) {
        const std::size_t next = match_right_[r];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kFar) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    for (std::size_t r : adjacency_[l]) {
      const std::size_t next = match_right_[r];
      if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kFar;
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

inline double sup_distance(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// An eps-matching of finite intervals exists iff this bipartite graph has a
// perfect matching: left = A ∪ (deletion slots for B), right = B ∪ (deletion
// slots for A); slots pair up freely.
inline bool has_matching(const std::vector<Interval>& a, const std::vector<Interval>& b, double eps) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  BipartiteMatcher m(p + q, q + p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j)
      if (sup_distance(a[i], b[j]) <= eps) m.add_edge(i, j);
    if (a[i].persistence() / 2 <= eps) m.add_edge(i, q + i);
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (b[j].persistence() / 2 <= eps) m.add_edge(p + j, j);
    for (std::size_t i = 0; i < p; ++i) m.add_edge(p + j, q + i);
  }
  return m.maximum_matching() == p + q;
}

}  // namespace detail

/// Bottleneck distance. Matched intervals cost the sup-norm of their endpoint
/// difference; an unmatched interval [a, b) costs |a - b| / 2. Intervals with
/// infinite death can only be matched to each other (cost |birth difference|);
/// if their counts differ the distance is infinite.
inline double bottleneck_distance(const Mergegram& a, const Mergegram& b) {
  std::vector<Interval> fa, fb;
  std::vector<double> ia, ib;
  auto split = [](const Mergegram& m, std::vector<Interval>& finite, std::vector<double>& births) {
    for (const auto& i : m.intervals()) {
      if (i.infinite()) births.push_back(i.birth);
      else finite.push_back(i);
    }
  };
  split(a, fa, ia);
  split(b, fb, ib);
  if (ia.size() != ib.size()) return kInfinity;
  double d = 0.0;
  // Sorted order is an optimal bottleneck matching on the line.
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  for (std::size_t k = 0; k < ia.size(); ++k) d = std::max(d, std::abs(ia[k] - ib[k]));

  // d itself is a candidate: the finite part may already fit within it.
  std::vector<double> candidates{0.0, d};
  for (const auto& x : fa) candidates.push_back(x.persistence() / 2);
  for (const auto& y : fb) candidates.push_back(y.persistence() / 2);
  for (const auto& x : fa)
    for (const auto& y : fb) candidates.push_back(detail::sup_distance(x, y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // Candidates at or below d cannot change the answer.
  auto first = std::lower_bound(candidates.begin(), candidates.end(), d);
  std::size_t lo = static_cast<std::size_t>(first - candidates.begin());
  std::size_t hi = candidates.size() - 1;  // the largest candidate is always feasible
  if (lo > hi) return d;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (detail::has_matching(fa, fb, candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return std::max(d, candidates[lo]);
}

namespace detail {

inline double interval_cost_alone(const std::optional<Interval>& i) {
  if (!i) return 0.0;
  return i->infinite() ? kInfinity : i->persistence() / 2;
}

}  // namespace detail

/// max over faces of the bottleneck distance between the (at most one point)
/// diagrams {I_sigma} of each labeled mergegram.
inline double linf_labeled_distance(const LabeledMergegram& a, const LabeledMergegram& b) {
  require_same_universe(a.taxa(), b.taxa(), "linf_labeled_distance");
  double d = 0.0;
  auto per_face = [](const std::optional<Interval>& x, const std::optional<Interval>& y) {
    if (x && y) {
      if (x->infinite() != y->infinite()) return kInfinity;
      const double matched = x->infinite() ? std::abs(x->birth - y->birth) : detail::sup_distance(*x, *y);
      return std::min(matched, std::max(detail::interval_cost_alone(x), detail::interval_cost_alone(y)));
    }
    return std::max(detail::interval_cost_alone(x), detail::interval_cost_alone(y));
  };
  for (const auto& e : a.entries()) d = std::max(d, per_face(e.interval, b.find(e.face)));
  for (const auto& e : b.entries())
    if (!a.find(e.face)) d = std::max(d, per_face(std::nullopt, e.interval));
  return d;
}

/// Interleaving distance of two grams over the same taxa set; equal to the
/// interleaving distance of their filtrations.
inline double facegram_interleaving(const Gram& a, const Gram& b) {
  require_same_universe(a.taxa(), b.taxa(), "facegram_interleaving");
  return filtration_interleaving(filtration_from_facegram(a), filtration_from_facegram(b));
}

}  // namespace phylolattice
