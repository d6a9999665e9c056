#pragma once

// Grams: piecewise-constant monotone maps t -> face-set, topping out at {X}.
//
// Only change points are stored. Below the first critical value the gram is
// the empty face-set; from the last critical value on it is {X}.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "phylolattice/detail/format.hpp"
#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/face_set.hpp"
#include "phylolattice/graph.hpp"

namespace phylolattice {

enum class GramKind { facegram, cliquegram, treegram };

inline std::string_view to_string(GramKind k) {
  switch (k) {
    case GramKind::facegram: return "facegram";
    case GramKind::cliquegram: return "cliquegram";
    case GramKind::treegram: return "treegram";
  }
  return "facegram";
}

inline GramKind gram_kind_from_string(std::string_view s) {
  if (s == "facegram") return GramKind::facegram;
  if (s == "cliquegram") return GramKind::cliquegram;
  if (s == "treegram") return GramKind::treegram;
  throw ValidationError("unknown gram kind '" + std::string(s) + "'");
}

struct GramLevel {
  double t = 0.0;
  FaceSet faces;

  friend bool operator==(const GramLevel&, const GramLevel&) = default;
};

class Gram {
 public:
  Gram() = default;

  /// Validates and normalizes: repeated consecutive face-sets are merged into
  /// the earlier critical value and leading empty levels are dropped. The kind
  /// is checked against every level.
  Gram(TaxaSet taxa, GramKind kind, std::vector<GramLevel> levels)
      : taxa_(std::move(taxa)), kind_(kind) {
    std::vector<std::string> problems;
    if (taxa_.empty()) throw ValidationError("gram over an empty taxa set");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (!std::isfinite(levels[i].t)) problems.push_back("level " + std::to_string(i) + ": non-finite critical value");
      if (i > 0 && !(levels[i - 1].t < levels[i].t))
        problems.push_back("level " + std::to_string(i) + ": critical values must strictly increase");
      for (const auto& f : levels[i].faces)
        if (!taxa_.within(f)) problems.push_back("level " + std::to_string(i) + ": face outside the taxa set");
    }
    if (!problems.empty()) throw ValidationError("invalid gram", std::move(problems));

    for (auto& level : levels) {
      if (levels_.empty() ? level.faces.empty() : level.faces == levels_.back().faces) continue;
      levels_.push_back(std::move(level));
    }
    for (std::size_t i = 1; i < levels_.size(); ++i)
      if (!faceset_leq(levels_[i - 1].faces, levels_[i].faces))
        problems.push_back("level at t=" + detail::format_number(levels_[i].t) + " does not refine the previous level");
    if (levels_.empty() || levels_.back().faces != FaceSet::from_antichain({taxa_.all()}))
      problems.push_back("last level must be the single face X");
    for (const auto& level : levels_) {
      if (kind_ == GramKind::treegram && !is_subpartition(level.faces))
        problems.push_back("treegram level at t=" + detail::format_number(level.t) + " is not a subpartition");
      if (kind_ == GramKind::cliquegram && !validate_cliqueset(level.faces))
        problems.push_back("cliquegram level at t=" + detail::format_number(level.t) + " is not a clique-set");
    }
    if (!problems.empty()) throw ValidationError("invalid gram", std::move(problems));
  }

  const TaxaSet& taxa() const { return taxa_; }
  GramKind kind() const { return kind_; }
  const std::vector<GramLevel>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }

  std::vector<double> criticals() const {
    std::vector<double> out;
    out.reserve(levels_.size());
    for (const auto& l : levels_) out.push_back(l.t);
    return out;
  }

  /// Index of the level in force at time t, or npos below the first critical value.
  std::size_t level_index_at(double t) const {
    auto it = std::upper_bound(levels_.begin(), levels_.end(), t,
                               [](double v, const GramLevel& l) { return v < l.t; });
    if (it == levels_.begin()) return npos;
    return static_cast<std::size_t>(it - levels_.begin()) - 1;
  }

  FaceSet at(double t) const {
    const std::size_t i = level_index_at(t);
    return i == npos ? FaceSet{} : levels_[i].faces;
  }

  /// Earliest time at which some face contains sigma (the filtration value of sigma).
  double cover_time(const Face& sigma) const {
    // Refinement monotonicity makes "covered at level i" monotone in i.
    std::size_t lo = 0;
    std::size_t hi = levels_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (levels_[mid].faces.covers(sigma)) hi = mid;
      else lo = mid + 1;
    }
    return levels_[lo].t;
  }

  /// Same face-sets, different kind tag (re-validated).
  Gram with_kind(GramKind kind) const { return Gram(taxa_, kind, levels_); }

  friend bool operator==(const Gram& a, const Gram& b) { return a.taxa_ == b.taxa_ && a.levels_ == b.levels_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  TaxaSet taxa_;
  GramKind kind_ = GramKind::facegram;
  std::vector<GramLevel> levels_;
};

/// Every level pairwise disjoint.
inline bool is_treegram(const Gram& g) {
  return std::all_of(g.levels().begin(), g.levels().end(), [](const GramLevel& l) { return is_subpartition(l.faces); });
}

/// a(t) <= b(t) for all t.
inline bool gram_leq(const Gram& a, const Gram& b) {
  require_same_universe(a.taxa(), b.taxa(), "gram_leq");
  for (const auto& l : a.levels())
    if (!faceset_leq(l.faces, b.at(l.t))) return false;
  return true;
}

/// Merges runs of critical values closer than `tol` (gap <= tol) into the
/// first time of the run, keeping the last face-set of the run.
inline Gram coalesce_levels(const Gram& g, double tol) {
  if (tol <= 0.0 || g.size() < 2) return g;
  std::vector<GramLevel> out;
  for (const auto& l : g.levels()) {
    if (!out.empty() && l.t - out.back().t <= tol) {
      out.back().faces = l.faces;
    } else {
      out.push_back(l);
    }
  }
  return Gram(g.taxa(), g.kind(), std::move(out));
}

}  // namespace phylolattice
