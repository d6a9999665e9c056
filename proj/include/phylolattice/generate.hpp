#pragma once

// Seeded random treegram families: i.i.d. uniform(0,1) dissimilarities pushed
// through UPGMA or single-linkage agglomeration to a cophenetic ultrametric.

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

enum class Linkage { upgma, single };

inline Linkage linkage_from_string(std::string_view s) {
  if (s == "upgma") return Linkage::upgma;
  if (s == "single-linkage" || s == "single") return Linkage::single;
  throw std::invalid_argument("unknown linkage '" + std::string(s) + "' (expected upgma or single-linkage)");
}

struct GeneratorConfig {
  std::size_t taxa = 10;
  std::size_t trees = 21;
  std::uint64_t seed = 7;
  Linkage linkage = Linkage::upgma;
};

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Symmetric dissimilarity over `taxa` with zero diagonal, upper triangle drawn row by row.
inline PhyloNetwork random_dissimilarity(const TaxaSet& taxa, std::mt19937_64& rng) {
  const std::size_t n = taxa.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = uniform01(rng);
  return PhyloNetwork(taxa, std::move(d));
}

/// Agglomerative clustering returning the cophenetic ultrametric (zero diagonal).
/// Ties merge the lexicographically smallest cluster pair. Merge heights are
/// clamped to be non-decreasing so rounding cannot break the strong triangle.
inline Ultranetwork agglomerate(const PhyloNetwork& d, Linkage linkage) {
  const std::size_t n = d.size();
  std::vector<double> dist(d.entries());
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  std::vector<bool> alive(n, true);
  std::vector<double> u(n * n, 0.0);
  double height = 0.0;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t a = 0, b = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (alive[j] && dist[i * n + j] < best) {
          best = dist[i * n + j];
          a = i;
          b = j;
        }
    }
    height = std::max(height, best);
    for (std::size_t x : members[a])
      for (std::size_t y : members[b]) u[x * n + y] = u[y * n + x] = height;
    const double wa = static_cast<double>(members[a].size());
    const double wb = static_cast<double>(members[b].size());
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || k == a || k == b) continue;
      const double da = dist[a * n + k];
      const double db = dist[b * n + k];
      const double merged = linkage == Linkage::upgma ? (wa * da + wb * db) / (wa + wb) : std::min(da, db);
      dist[a * n + k] = dist[k * n + a] = merged;
    }
    members[a].insert(members[a].end(), members[b].begin(), members[b].end());
    members[b].clear();
    alive[b] = false;
  }
  return Ultranetwork(PhyloNetwork(d.taxa(), std::move(u)));
}

inline Ultranetwork single_linkage(const PhyloNetwork& d) { return agglomerate(d, Linkage::single); }
inline Ultranetwork upgma(const PhyloNetwork& d) { return agglomerate(d, Linkage::upgma); }

/// `trees` ultranetworks over taxa "t0".."t{n-1}". Deterministic in the seed.
inline std::vector<Ultranetwork> gen_random_treegrams(const GeneratorConfig& cfg) {
  if (cfg.taxa == 0 || cfg.trees == 0) throw ValidationError("generator needs at least one taxon and one tree");
  const TaxaSet taxa = TaxaSet::numbered(cfg.taxa, "t");
  std::mt19937_64 rng(cfg.seed);
  std::vector<Ultranetwork> out;
  out.reserve(cfg.trees);
  for (std::size_t k = 0; k < cfg.trees; ++k) out.push_back(agglomerate(random_dissimilarity(taxa, rng), cfg.linkage));
  return out;
}

}  // namespace phylolattice
