#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// Oracles deliberately avoid the library's algorithms: subset enumeration
// instead of Bron–Kerbosch, exhaustive matchings instead of Hopcroft–Karp,
// minimax paths instead of union-find.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "phylolattice.hpp"

namespace testing_support {

using namespace phylolattice;

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline TaxaSet letters(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p"};
  if (n <= 16) return TaxaSet(std::vector<std::string>(names, names + n));
  return TaxaSet::numbered(n, "x");
}

/// Symmetric matrix with small integer off-diagonals (ties are common) and
/// diagonals no larger than their row minimum.
inline PhyloNetwork random_network(std::size_t n, std::mt19937_64& rng, int max_value = 6, bool zero_diagonal = false) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m[i * n + j] = m[j * n + i] = static_cast<double>(1 + uniform_index(rng, static_cast<std::size_t>(max_value)));
  for (std::size_t i = 0; i < n; ++i) {
    double row_min = static_cast<double>(max_value);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row_min = std::min(row_min, m[i * n + j]);
    m[i * n + i] = zero_diagonal ? 0.0 : static_cast<double>(uniform_index(rng, static_cast<std::size_t>(row_min) + 1));
  }
  return PhyloNetwork(letters(n), std::move(m));
}

/// Single-linkage ultrametric of a random integer matrix, then random
/// observation times on the diagonal (bounded by the row minimum).
inline Ultranetwork random_ultranetwork(std::size_t n, std::mt19937_64& rng, bool zero_diagonal = false) {
  const auto base = single_linkage(random_network(n, rng, 6, true));
  std::vector<double> m = base.network().entries();
  if (!zero_diagonal)
    for (std::size_t i = 0; i < n; ++i) {
      double row_min = 6;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) row_min = std::min(row_min, m[i * n + j]);
      m[i * n + i] = static_cast<double>(uniform_index(rng, static_cast<std::size_t>(row_min) + 1));
    }
  return Ultranetwork(PhyloNetwork(base.taxa(), std::move(m)));
}

inline Face random_face(std::size_t n, std::mt19937_64& rng, double p) {
  Face f;
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) f.insert(i);
  if (f.empty()) f.insert(uniform_index(rng, n));
  return f;
}

/// Monotone facegram: each level absorbs a few random faces into the previous one.
inline Gram random_facegram(std::size_t n, std::mt19937_64& rng, std::size_t levels = 4) {
  const TaxaSet taxa = letters(n);
  std::vector<GramLevel> out;
  std::vector<Face> current;
  double t = static_cast<double>(uniform_index(rng, 3));
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t fresh = 1 + uniform_index(rng, 3);
    for (std::size_t i = 0; i < fresh; ++i) current.push_back(random_face(n, rng, 0.35));
    FaceSet s = FaceSet::maximal_of(current);
    current = s.faces();
    out.push_back({t, std::move(s)});
    t += static_cast<double>(1 + uniform_index(rng, 2));
  }
  out.push_back({t, FaceSet::from_antichain({taxa.all()})});
  return Gram(taxa, GramKind::facegram, std::move(out));
}

inline Surjection random_surjection(const TaxaSet& target, std::size_t z_size, std::mt19937_64& rng) {
  std::vector<std::size_t> map(z_size);
  for (std::size_t z = 0; z < z_size; ++z) map[z] = z < target.size() ? z : uniform_index(rng, target.size());
  std::shuffle(map.begin(), map.end(), rng);
  return Surjection(TaxaSet::numbered(z_size, "z"), target, std::move(map));
}

inline Face face_of_mask(std::size_t mask) {
  Face f;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) f.insert(i);
  return f;
}

// ---- oracles ---------------------------------------------------------------

/// Maximal cliques by enumerating every vertex subset.
inline std::vector<Face> maximal_cliques_oracle(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& present) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> cliques;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      if (!present[i]) ok = false;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (((mask >> j) & 1U) && !adj[i][j]) ok = false;
    }
    if (ok) cliques.push_back(mask);
  }
  std::vector<Face> out;
  for (std::size_t c : cliques) {
    bool maximal = true;
    for (std::size_t d : cliques)
      if (d != c && (c & d) == c) maximal = false;
    if (maximal) out.push_back(face_of_mask(c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Exhaustive bottleneck: every partial matching of the expanded point lists.
inline double bottleneck_oracle(const Mergegram& a, const Mergegram& b) {
  const auto& pa = a.intervals();
  const auto& pb = b.intervals();
  const double inf = std::numeric_limits<double>::infinity();
  auto alone = [&](const Interval& i) { return i.infinite() ? inf : (i.death - i.birth) / 2; };
  auto pair = [&](const Interval& x, const Interval& y) {
    if (x.infinite() != y.infinite()) return inf;
    if (x.infinite()) return std::abs(x.birth - y.birth);
    return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
  };
  std::vector<bool> used(pb.size(), false);
  double best = inf;
  std::function<void(std::size_t, double)> go = [&](std::size_t i, double cost) {
    if (cost >= best) return;
    if (i == pa.size()) {
      for (std::size_t j = 0; j < pb.size(); ++j)
        if (!used[j]) cost = std::max(cost, alone(pb[j]));
      best = std::min(best, cost);
      return;
    }
    go(i + 1, std::max(cost, alone(pa[i])));
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (!used[j]) {
        used[j] = true;
        go(i + 1, std::max(cost, pair(pa[i], pb[j])));
        used[j] = false;
      }
  };
  go(0, 0.0);
  return best;
}

/// Single-linkage ultrametric as minimax path lengths (Floyd–Warshall).
inline std::vector<double> single_linkage_oracle(const std::vector<double>& points) {
  const std::size_t n = points.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::abs(points[i] - points[j]);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], std::max(d[i * n + k], d[k * n + j]));
  return d;
}

inline PhyloNetwork line_metric(const std::vector<double>& points) {
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  for (double p : points) labels.push_back(detail::format_number(p));
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::abs(points[i] - points[j]);
  return PhyloNetwork(TaxaSet(std::move(labels)), std::move(d));
}

inline Ultranetwork line_single_linkage(const std::vector<double>& points) {
  return Ultranetwork(PhyloNetwork(line_metric(points).taxa(), single_linkage_oracle(points)));
}

/// sup over all 2^n - 1 faces of |F - G|.
inline double interleaving_oracle(const Filtration& f, const Filtration& g) {
  double d = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << f.taxa().size()); ++mask) {
    const Face s = face_of_mask(mask);
    d = std::max(d, std::abs(f(s) - g(s)));
  }
  return d;
}

/// I_sigma = [F(sigma), min over all proper supersets F(tau)) by full enumeration.
inline std::map<Face, Interval> mergegram_formula_oracle(const Filtration& f) {
  const std::size_t n = f.taxa().size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::map<Face, Interval> out;
  for (std::size_t s = 1; s <= full; ++s) {
    double death = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t <= full; ++t)
      if (t != s && (t & s) == s) death = std::min(death, f(face_of_mask(t)));
    const double birth = f(face_of_mask(s));
    if (birth < death) out.emplace(face_of_mask(s), Interval{birth, death});
  }
  return out;
}

inline std::map<Face, Interval> as_map(const LabeledMergegram& m) {
  std::map<Face, Interval> out;
  for (const auto& e : m.entries()) out.emplace(e.face, e.interval);
  return out;
}

inline Gram gram_of(const TaxaSet& taxa, GramKind kind,
                    const std::vector<std::pair<double, std::vector<std::vector<std::string>>>>& levels) {
  std::vector<GramLevel> out;
  for (const auto& [t, faces] : levels) {
    std::vector<Face> fs;
    for (const auto& names : faces) fs.push_back(taxa.face(names));
    out.push_back({t, FaceSet::from_antichain(std::move(fs))});
  }
  return Gram(taxa, kind, std::move(out));
}

inline FaceSet faces_of(const TaxaSet& taxa, const std::vector<std::vector<std::string>>& faces) {
  std::vector<Face> fs;
  for (const auto& names : faces) fs.push_back(taxa.face(names));
  return FaceSet::from_antichain(std::move(fs));
}

inline LabeledMergegram labeled_of(const TaxaSet& taxa,
                                   const std::vector<std::pair<std::vector<std::string>, Interval>>& entries) {
  std::vector<LabeledInterval> out;
  for (const auto& [names, i] : entries) out.push_back({taxa.face(names), i});
  return LabeledMergegram(taxa, std::move(out));
}

}  // namespace testing_support
