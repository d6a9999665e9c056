#pragma once

// Mergegrams: the lifespans [birth, death) of the maximal faces of a gram,
// as a multiset (unlabeled) or keyed by face (labeled).

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "phylolattice/cliquegram.hpp"
#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/filtration.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Half-open lifespan [birth, death); death may be +infinity.
struct Interval {
  double birth = 0.0;
  double death = kInfinity;

  bool infinite() const { return std::isinf(death); }
  double persistence() const { return death - birth; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.birth <=> b.birth; c != 0) return c;
    return a.death <=> b.death;
  }
};

/// Multiset of intervals, kept sorted by (birth, death) with infinite deaths last.
class Mergegram {
 public:
  Mergegram() = default;

  explicit Mergegram(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (const auto& i : intervals_)
      if (!(i.birth < i.death) || std::isnan(i.birth) || std::isinf(i.birth))
        throw ValidationError("mergegram interval with birth >= death or non-finite birth");
    std::sort(intervals_.begin(), intervals_.end());
  }

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  struct Point {
    Interval interval;
    std::size_t multiplicity;
  };

  /// Distinct intervals with their multiplicities, in canonical order.
  std::vector<Point> points() const {
    std::vector<Point> out;
    for (const auto& i : intervals_) {
      if (!out.empty() && out.back().interval == i) ++out.back().multiplicity;
      else out.push_back({i, 1});
    }
    return out;
  }

  friend bool operator==(const Mergegram&, const Mergegram&) = default;

 private:
  std::vector<Interval> intervals_;
};

struct LabeledInterval {
  Face face;
  Interval interval;

  friend bool operator==(const LabeledInterval&, const LabeledInterval&) = default;
};

/// At most one interval per face; entries sorted by canonical face order.
class LabeledMergegram {
 public:
  LabeledMergegram() = default;

  LabeledMergegram(TaxaSet taxa, std::vector<LabeledInterval> entries) : taxa_(std::move(taxa)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const LabeledInterval& a, const LabeledInterval& b) { return canonical_less(a.face, b.face); });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.face.empty() || !taxa_.within(e.face)) throw ValidationError("labeled mergegram: face outside the taxa set");
      if (!(e.interval.birth < e.interval.death) || !std::isfinite(e.interval.birth))
        throw ValidationError("labeled mergegram: degenerate interval for " + taxa_.format(e.face));
      if (i > 0 && entries_[i - 1].face == e.face)
        throw ValidationError("labeled mergegram: two intervals for " + taxa_.format(e.face));
    }
  }

  const TaxaSet& taxa() const { return taxa_; }
  const std::vector<LabeledInterval>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<Interval> find(const Face& f) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), f,
                               [](const LabeledInterval& e, const Face& g) { return canonical_less(e.face, g); });
    if (it != entries_.end() && it->face == f) return it->interval;
    return std::nullopt;
  }

  Mergegram unlabeled() const {
    std::vector<Interval> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.interval);
    return Mergegram(std::move(out));
  }

  /// Number of faces alive at time t.
  std::size_t alive_at(double t) const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [t](const LabeledInterval& e) {
      return e.interval.birth <= t && t < e.interval.death;
    }));
  }

  friend bool operator==(const LabeledMergegram& a, const LabeledMergegram& b) {
    return a.taxa_ == b.taxa_ && a.entries_ == b.entries_;
  }

 private:
  TaxaSet taxa_;
  std::vector<LabeledInterval> entries_;
};

/// Sweep over the critical values: a face is born when it enters a level and
/// dies at the first critical value where it has left. The top face never dies.
inline LabeledMergegram labeled_mergegram(const Gram& g) {
  const auto& levels = g.levels();
  std::unordered_map<Face, double, FaceHash> open;
  std::vector<LabeledInterval> closed;
  std::unordered_map<Face, bool, FaceHash> seen;
  auto born = [&](const Face& f, double t) {
    // Refinement monotonicity makes each lifespan an interval, so a face
    // never re-enters after leaving.
    if (!seen.emplace(f, true).second) throw ValidationError("face re-appears after dying; gram is not monotone");
    open.emplace(f, t);
  };
  for (const auto& f : levels.front().faces) born(f, levels.front().t);
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const auto& now = levels[i].faces.faces();
    const auto& next = levels[i + 1].faces.faces();
    const double t = levels[i + 1].t;
    std::vector<Face> appearing;
    std::vector<Face> vanishing;
    std::set_difference(next.begin(), next.end(), now.begin(), now.end(), std::back_inserter(appearing), canonical_less);
    std::set_difference(now.begin(), now.end(), next.begin(), next.end(), std::back_inserter(vanishing), canonical_less);
    for (const auto& f : appearing) born(f, t);
    for (const auto& f : vanishing) {
      auto it = open.find(f);
      assert(it != open.end());
      closed.push_back({f, {it->second, t}});
      open.erase(it);
    }
  }
  for (const auto& [f, birth] : open) closed.push_back({f, {birth, kInfinity}});
  return LabeledMergegram(g.taxa(), std::move(closed));
}

inline Mergegram mergegram(const Gram& g) { return labeled_mergegram(g).unlabeled(); }

/// Lifespans straight from filtration values:
///   I_sigma = [F(sigma), min_{tau in S, tau ⊋ sigma} F(tau)), kept when non-empty.
/// `support` must contain every face that is maximal at some time. Without it,
/// all non-empty subsets are scanned (at most 20 taxa) and the minimum over
/// supersets reduces to one-element extensions by monotonicity.
inline LabeledMergegram labeled_mergegram_of_filtration(const Filtration& f,
                                                        std::optional<std::span<const Face>> support = std::nullopt) {
  std::vector<LabeledInterval> out;
  if (support) {
    std::vector<Face> s(support->begin(), support->end());
    std::sort(s.begin(), s.end(), canonical_less);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<double> value(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) value[i] = f(s[i]);
    for (std::size_t i = 0; i < s.size(); ++i) {
      double death = kInfinity;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (s[i].is_proper_subset_of(s[j])) death = std::min(death, value[j]);
      if (value[i] < death) out.push_back({s[i], {value[i], death}});
    }
    return LabeledMergegram(f.taxa(), std::move(out));
  }
  const std::size_t n = f.taxa().size();
  if (n > 20) throw std::length_error("labeled_mergegram_of_filtration: pass a support for more than 20 taxa");
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> value(count);
  auto face_of = [](std::size_t mask) {
    Face s;
    for (std::size_t b = 0; mask != 0; ++b, mask >>= 1)
      if (mask & 1U) s.insert(b);
    return s;
  };
  for (std::size_t mask = 1; mask < count; ++mask) value[mask] = f(face_of(mask));
  for (std::size_t mask = 1; mask < count; ++mask) {
    double death = kInfinity;
    for (std::size_t b = 0; b < n; ++b)
      if (!((mask >> b) & 1U)) death = std::min(death, value[mask | (std::size_t{1} << b)]);
    if (value[mask] < death) out.push_back({face_of(mask), {value[mask], death}});
  }
  return LabeledMergegram(f.taxa(), std::move(out));
}

inline Mergegram mergegram_of_filtration(const Filtration& f, std::optional<std::span<const Face>> support = std::nullopt) {
  return labeled_mergegram_of_filtration(f, support).unlabeled();
}

/// Rebuilds the gram from its labeled mergegram: C(t) is the set of faces
/// alive at t.
inline Gram gram_from_labeled_mergegram(const LabeledMergegram& m, GramKind kind = GramKind::facegram) {
  std::vector<double> times;
  for (const auto& e : m.entries()) {
    times.push_back(e.interval.birth);
    if (!e.interval.infinite()) times.push_back(e.interval.death);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<GramLevel> levels;
  for (double t : times) {
    std::vector<Face> alive;
    for (const auto& e : m.entries())
      if (e.interval.birth <= t && t < e.interval.death) alive.push_back(e.face);
    levels.push_back({t, FaceSet::from_antichain(std::move(alive))});
  }
  return Gram(m.taxa(), kind, std::move(levels));
}

/// Join-facegram mergegram from the trees' labeled mergegrams alone.
///
/// Each tree's filtration value of sigma is the earliest birth among its faces
/// containing sigma; the tree's "death" of sigma is the interval end when
/// sigma is one of its faces and its filtration value otherwise. The join
/// takes minima of both over all trees.
inline LabeledMergegram join_mergegram_from_tree_mergegrams(std::span<const LabeledMergegram> trees) {
  if (trees.empty()) throw std::invalid_argument("join_mergegram_from_tree_mergegrams: no trees");
  for (const auto& t : trees) require_same_universe(trees.front().taxa(), t.taxa(), "join_mergegram_from_tree_mergegrams");
  std::vector<Face> faces;
  for (const auto& t : trees)
    for (const auto& e : t.entries()) faces.push_back(e.face);
  std::sort(faces.begin(), faces.end(), canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<LabeledInterval> out;
  for (const auto& sigma : faces) {
    double birth = kInfinity;
    double death = kInfinity;
    for (const auto& t : trees) {
      double value = kInfinity;
      for (const auto& e : t.entries())
        if (sigma.is_subset_of(e.face)) value = std::min(value, e.interval.birth);
      const auto own = t.find(sigma);
      birth = std::min(birth, value);
      death = std::min(death, own ? own->death : value);
    }
    if (birth < death) out.push_back({sigma, {birth, death}});
  }
  return LabeledMergegram(trees.front().taxa(), std::move(out));
}

/// Join-facegram mergegram straight from the ultranetworks: for every face
/// sigma of any tree,
///   a = min_i max_{x,y in sigma} U_i(x,y)
///   b = min_i min_{y not in sigma} max_{x in sigma} U_i(x,y)   (+inf for sigma = X)
/// and [a, b) is kept when a < b. Runs in O(n^4 l^2).
inline LabeledMergegram join_mergegram_of_treegrams(std::span<const Ultranetwork> trees, std::size_t jobs = 1) {
  if (trees.empty()) throw std::invalid_argument("join_mergegram_of_treegrams: no trees");
  const TaxaSet& taxa = trees.front().taxa();
  for (const auto& t : trees) require_same_universe(taxa, t.taxa(), "join_mergegram_of_treegrams");

  std::vector<Face> faces;
  for (const auto& t : trees) {
    const Gram tree = treegram_from_ultranetwork(t);
    for (const auto& l : tree.levels()) faces.insert(faces.end(), l.faces.begin(), l.faces.end());
  }
  std::sort(faces.begin(), faces.end(), canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  const Face everything = taxa.all();
  std::vector<std::optional<LabeledInterval>> slots(faces.size());
  detail::parallel_for(faces.size(), jobs, [&](std::size_t k) {
    const Face& sigma = faces[k];
    const auto inside = sigma.members();
    const auto outside = (everything - sigma).members();
    double a = kInfinity;
    double b = kInfinity;
    for (const auto& u : trees) {
      double diameter = -kInfinity;
      for (std::size_t x : inside)
        for (std::size_t y : inside) diameter = std::max(diameter, u(x, y));
      a = std::min(a, diameter);
      for (std::size_t y : outside) {
        double reach = -kInfinity;
        for (std::size_t x : inside) reach = std::max(reach, u(x, y));
        b = std::min(b, reach);
      }
    }
    if (a < b) slots[k] = LabeledInterval{sigma, {a, b}};
  });
  std::vector<LabeledInterval> out;
  for (auto& s : slots)
    if (s) out.push_back(*s);
  return LabeledMergegram(taxa, std::move(out));
}

}  // namespace phylolattice
