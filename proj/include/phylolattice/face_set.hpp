#pragma once

// Face-sets: antichains of faces under inclusion, and the lattice operations on them.
//
// A face-set is stored as a canonically sorted vector (see `canonical_less`),
// so equal face-sets compare equal element-wise and serialize identically.
// Face-sets carry no universe; containers that do (grams, networks) check it.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"

namespace phylolattice {

namespace detail {

// Faces bucketed by member: any superset of f lies in the bucket of f.first().
class SupersetIndex {
 public:
  void add(std::size_t id, const Face& f) {
    f.for_each([&](std::size_t x) {
      if (x >= buckets_.size()) buckets_.resize(x + 1);
      buckets_[x].push_back(id);
    });
  }

  bool has_superset(const std::vector<Face>& faces, const Face& f) const {
    const std::size_t x = f.first();
    if (x >= buckets_.size()) return false;
    for (std::size_t id : buckets_[x])
      if (f.is_subset_of(faces[id])) return true;
    return false;
  }

 private:
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace detail

class FaceSet {
 public:
  FaceSet() = default;

  /// Validating constructor: faces must be non-empty and pairwise incomparable.
  static FaceSet from_antichain(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), canonical_less);
    std::vector<std::string> problems;
    detail::SupersetIndex earlier;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].empty()) {
        problems.push_back("empty face");
        continue;
      }
      // Canonical order puts every superset of faces[i] before it.
      if (earlier.has_superset(faces, faces[i]))
        problems.push_back("face #" + std::to_string(i) + " is contained in an earlier face");
      earlier.add(i, faces[i]);
    }
    if (!problems.empty()) throw ValidationError("not an antichain of non-empty faces", std::move(problems));
    FaceSet s;
    s.faces_ = std::move(faces);
    return s;
  }

  /// Maximal elements (under inclusion) of an arbitrary collection; empty faces dropped.
  static FaceSet maximal_of(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), canonical_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    FaceSet s;
    detail::SupersetIndex kept;
    for (auto& f : faces) {
      if (f.empty()) continue;
      // Faces are visited by non-increasing size, so only kept faces can absorb f.
      if (kept.has_superset(s.faces_, f)) continue;
      kept.add(s.faces_.size(), f);
      s.faces_.push_back(f);
    }
    return s;
  }

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  auto begin() const { return faces_.begin(); }
  auto end() const { return faces_.end(); }

  bool contains(const Face& f) const { return std::binary_search(faces_.begin(), faces_.end(), f, canonical_less); }

  /// True iff some face of the set contains `f`.
  bool covers(const Face& f) const {
    for (const auto& g : faces_)
      if (f.is_subset_of(g)) return true;
    return false;
  }

  /// Union of all faces.
  Face support() const {
    Face u;
    for (const auto& f : faces_) u |= f;
    return u;
  }

  friend bool operator==(const FaceSet&, const FaceSet&) = default;

 private:
  std::vector<Face> faces_;
};

/// a ≤ b: every face of a lies inside some face of b.
inline bool faceset_leq(const FaceSet& a, const FaceSet& b) {
  detail::SupersetIndex index;
  for (std::size_t i = 0; i < b.size(); ++i) index.add(i, b.faces()[i]);
  for (const auto& f : a)
    if (!index.has_superset(b.faces(), f)) return false;
  return true;
}

/// Least upper bound: maximal elements of the union.
inline FaceSet faceset_join(std::span<const FaceSet> parts) {
  if (parts.empty()) throw std::invalid_argument("faceset_join: empty list of face-sets");
  if (parts.size() == 1) return parts.front();
  std::vector<Face> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return FaceSet::maximal_of(std::move(all));
}

inline FaceSet faceset_join(const FaceSet& a, const FaceSet& b) {
  const FaceSet parts[] = {a, b};
  return faceset_join(std::span<const FaceSet>(parts));
}

/// Greatest lower bound: maximal non-empty pairwise intersections.
inline FaceSet faceset_meet(const FaceSet& a, const FaceSet& b) {
  std::vector<Face> all;
  for (const auto& f : a)
    for (const auto& g : b) {
      Face h = f & g;
      if (!h.empty()) all.push_back(h);
    }
  return FaceSet::maximal_of(std::move(all));
}

/// Downward closure of a face-set: every non-empty subset of every face,
/// canonically sorted. Exponential in face size; meant for small faces.
inline std::vector<Face> faceset_to_complex(const FaceSet& s) {
  std::vector<Face> out;
  for (const auto& f : s) {
    const auto members = f.members();
    if (members.size() > 24) throw std::length_error("faceset_to_complex: face too large to enumerate");
    const std::size_t count = std::size_t{1} << members.size();
    for (std::size_t mask = 1; mask < count; ++mask) {
      Face g;
      for (std::size_t b = 0; b < members.size(); ++b)
        if ((mask >> b) & 1U) g.insert(members[b]);
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Maximal faces of a simplicial complex (any collection works).
inline FaceSet complex_to_faceset(std::vector<Face> complex) { return FaceSet::maximal_of(std::move(complex)); }

/// Pairwise-disjoint faces.
inline bool is_subpartition(const FaceSet& s) {
  Face seen;
  for (const auto& f : s) {
    if (seen.intersects(f)) return false;
    seen |= f;
  }
  return true;
}

inline std::string format_faceset(const TaxaSet& taxa, const FaceSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : s) {
    if (!first) out += ',';
    out += taxa.format(f);
    first = false;
  }
  return out + "}";
}

}  // namespace phylolattice
