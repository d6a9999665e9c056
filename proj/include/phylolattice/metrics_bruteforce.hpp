#pragma once

// Exhaustive Gromov–Hausdorff and tripod distances over all correspondences.
// Exponential in |X|·|Y|; only meant as reference values for tiny inputs.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phylolattice/filtration.hpp"
#include "phylolattice/mergegram.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

inline constexpr std::size_t kBruteForceMaxPairs = 20;

namespace detail {

// Calls fn(pairs) for every correspondence R ⊆ X×Y whose projections are onto.
template <class Fn>
void for_each_correspondence(std::size_t nx, std::size_t ny, Fn&& fn) {
  const std::size_t total = nx * ny;
  if (total > kBruteForceMaxPairs)
    throw std::length_error("brute-force correspondence search limited to |X|*|Y| <= " +
                            std::to_string(kBruteForceMaxPairs));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t full_x = (std::size_t{1} << nx) - 1;
  const std::size_t full_y = (std::size_t{1} << ny) - 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << total); ++mask) {
    std::size_t hit_x = 0;
    std::size_t hit_y = 0;
    pairs.clear();
    for (std::size_t k = 0; k < total; ++k)
      if ((mask >> k) & 1U) {
        pairs.emplace_back(k / ny, k % ny);
        hit_x |= std::size_t{1} << (k / ny);
        hit_y |= std::size_t{1} << (k % ny);
      }
    if (hit_x == full_x && hit_y == full_y) fn(pairs);
  }
}

}  // namespace detail

/// min over correspondences R of max_{(x,y),(x',y') in R} |N_X(x,x') - N_Y(y,y')|.
inline double gromov_hausdorff_bruteforce(const PhyloNetwork& a, const PhyloNetwork& b) {
  double best = kInfinity;
  detail::for_each_correspondence(a.size(), b.size(), [&](const auto& r) {
    double distortion = 0.0;
    for (const auto& [x, y] : r)
      for (const auto& [x2, y2] : r) {
        distortion = std::max(distortion, std::abs(a(x, x2) - b(y, y2)));
        if (distortion >= best) return;
      }
    best = std::min(best, distortion);
  });
  return best;
}

/// min over correspondences R (as tripods X <- R -> Y) of the interleaving
/// distance between the two pulled-back filtrations on R.
inline double tripod_distance_bruteforce(const Filtration& f, const Filtration& g) {
  double best = kInfinity;
  detail::for_each_correspondence(f.taxa().size(), g.taxa().size(), [&](const auto& r) {
    std::vector<std::string> labels;
    std::vector<std::size_t> to_x, to_y;
    for (const auto& [x, y] : r) {
      labels.push_back(f.taxa().label(x) + "|" + g.taxa().label(y));
      to_x.push_back(x);
      to_y.push_back(y);
    }
    const TaxaSet z(std::move(labels));
    const auto pf = pullback_filtration(f, Surjection(z, f.taxa(), std::move(to_x)));
    const auto pg = pullback_filtration(g, Surjection(z, g.taxa(), std::move(to_y)));
    best = std::min(best, filtration_interleaving(pf, pg));
  });
  return best;
}

}  // namespace phylolattice
