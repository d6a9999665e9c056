#pragma once

// Phylogenetic networks: symmetric matrices N over a taxa set with
// max{N(x,x), N(x',x')} <= N(x,x'). Entry (x,x') is the coalescence time of x
// and x'; the diagonal holds observation times.

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"

namespace phylolattice {

class PhyloNetwork {
 public:
  PhyloNetwork() = default;

  /// Validating constructor. `entries` is row-major, size taxa.size()^2.
  /// Throws ValidationError listing every violated cell.
  PhyloNetwork(TaxaSet taxa, std::vector<double> entries) : taxa_(std::move(taxa)), entries_(std::move(entries)) {
    const std::size_t n = taxa_.size();
    if (entries_.size() != n * n)
      throw ValidationError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                            std::to_string(n * n));
    auto problems = violations();
    if (!problems.empty()) throw ValidationError("invalid phylogenetic network", std::move(problems));
  }

  PhyloNetwork(TaxaSet taxa, const std::vector<std::vector<double>>& rows) : PhyloNetwork(std::move(taxa), flatten(rows)) {}

  const TaxaSet& taxa() const { return taxa_; }
  std::size_t size() const { return taxa_.size(); }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  double at(const std::string& a, const std::string& b) const { return (*this)(taxa_.index(a), taxa_.index(b)); }

  const std::vector<double>& entries() const { return entries_; }

  /// Sorted distinct entries (the critical values of the associated cliquegram).
  std::vector<double> distinct_values() const {
    std::vector<double> v = entries_;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  friend bool operator==(const PhyloNetwork&, const PhyloNetwork&) = default;

 private:
  static std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
    std::vector<double> out;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw ValidationError("matrix is not square");
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  std::vector<std::string> violations() const {
    std::vector<std::string> problems;
    const std::size_t n = size();
    auto cell = [&](std::size_t i, std::size_t j) {
      return "(" + taxa_.label(i) + "," + taxa_.label(j) + ")";
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double v = (*this)(i, j);
        if (!std::isfinite(v)) {
          problems.push_back("non-finite entry at " + cell(i, j));
          continue;
        }
        if (j <= i) continue;
        const double w = (*this)(j, i);
        if (std::isfinite(w) && v != w) {
          std::ostringstream os;
          os << "asymmetric entries at " << cell(i, j) << ": " << v << " != " << w;
          problems.push_back(os.str());
        }
        const double di = (*this)(i, i);
        const double dj = (*this)(j, j);
        if (std::isfinite(di) && std::isfinite(dj) && std::max(di, dj) > std::min(v, w)) {
          std::ostringstream os;
          os << "diagonal exceeds coalescence time at " << cell(i, j) << ": max(" << di << ", " << dj
             << ") > " << std::min(v, w);
          problems.push_back(os.str());
        }
      }
    }
    return problems;
  }

  TaxaSet taxa_;
  std::vector<double> entries_;
};

inline PhyloNetwork validate_network(TaxaSet taxa, std::vector<double> entries) {
  return PhyloNetwork(std::move(taxa), std::move(entries));
}

/// Strong triangle inequality N(x,z) <= max{N(x,y), N(y,z)} for all triples.
inline bool is_ultranetwork(const PhyloNetwork& n) {
  const std::size_t k = n.size();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if (n(x, z) > std::max(n(x, y), n(y, z))) return false;
  return true;
}

/// A phylogenetic network satisfying the strong triangle inequality
/// (equivalently, the matrix of a treegram).
class Ultranetwork {
 public:
  explicit Ultranetwork(PhyloNetwork n) : network_(std::move(n)) {
    if (!is_ultranetwork(network_)) throw ValidationError("network violates the strong triangle inequality");
  }

  const PhyloNetwork& network() const { return network_; }
  const TaxaSet& taxa() const { return network_.taxa(); }
  std::size_t size() const { return network_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return network_(i, j); }

  friend bool operator==(const Ultranetwork&, const Ultranetwork&) = default;

 private:
  PhyloNetwork network_;
};

/// Diameter max_{x,x' in sigma} N(x,x'): the Vietoris–Rips filtration value.
inline double vr_value(const PhyloNetwork& n, const Face& sigma) {
  if (sigma.empty()) throw std::invalid_argument("vr_value: empty face");
  if (!n.taxa().within(sigma)) throw std::invalid_argument("vr_value: face outside the taxa set");
  const auto m = sigma.members();
  double d = n(m[0], m[0]);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) d = std::max(d, n(m[i], m[j]));
  return d;
}

/// Join in the network lattice (reverse entrywise order): entrywise minimum.
inline PhyloNetwork network_join(std::span<const PhyloNetwork> nets) {
  if (nets.empty()) throw std::invalid_argument("network_join: empty list");
  std::vector<double> entries = nets.front().entries();
  for (const auto& n : nets.subspan(1)) {
    require_same_universe(nets.front().taxa(), n.taxa(), "network_join");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = std::min(entries[i], n.entries()[i]);
  }
  return PhyloNetwork(nets.front().taxa(), std::move(entries));
}

inline PhyloNetwork network_join(std::span<const Ultranetwork> trees) {
  std::vector<PhyloNetwork> nets;
  nets.reserve(trees.size());
  for (const auto& t : trees) nets.push_back(t.network());
  return network_join(std::span<const PhyloNetwork>(nets));
}

}  // namespace phylolattice
