#pragma once

// Taxa universes and faces (subsets of a universe stored as fixed-width bitmasks).

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "phylolattice/error.hpp"

namespace phylolattice {

inline constexpr std::size_t kMaxTaxa = 256;

/// A subset of taxon indices `0 .. kMaxTaxa-1`.
///
/// Subset tests, unions and intersections are word-parallel bit operations.
/// The empty bitmask is representable (it is the neutral element of unions),
/// but `FaceSet` never stores it.
class Face {
 public:
  static constexpr std::size_t kWords = kMaxTaxa / 64;

  constexpr Face() = default;

  Face(std::initializer_list<std::size_t> members) {
    for (std::size_t m : members) insert(m);
  }

  static Face singleton(std::size_t index) {
    Face f;
    f.insert(index);
    return f;
  }

  /// {0, 1, ..., n-1}
  static Face prefix(std::size_t n) {
    if (n > kMaxTaxa) throw std::out_of_range("Face::prefix: too many taxa");
    Face f;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = std::min<std::size_t>(n, 64);
      f.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return f;
  }

  void insert(std::size_t index) {
    if (index >= kMaxTaxa) throw std::out_of_range("Face::insert: taxon index out of range");
    words_[index / 64] |= std::uint64_t{1} << (index % 64);
  }

  void erase(std::size_t index) {
    if (index >= kMaxTaxa) return;
    words_[index / 64] &= ~(std::uint64_t{1} << (index % 64));
  }

  bool contains(std::size_t index) const {
    return index < kMaxTaxa && ((words_[index / 64] >> (index % 64)) & 1U) != 0;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const Face& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  bool is_proper_subset_of(const Face& other) const { return is_subset_of(other) && *this != other; }

  bool intersects(const Face& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  Face operator|(const Face& other) const {
    Face r;
    for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = words_[w] | other.words_[w];
    return r;
  }

  Face operator&(const Face& other) const {
    Face r;
    for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = words_[w] & other.words_[w];
    return r;
  }

  /// Set difference.
  Face operator-(const Face& other) const {
    Face r;
    for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = words_[w] & ~other.words_[w];
    return r;
  }

  Face& operator|=(const Face& other) { return *this = *this | other; }
  Face& operator&=(const Face& other) { return *this = *this & other; }

  /// Smallest member, or kMaxTaxa when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kMaxTaxa;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  friend bool operator==(const Face&, const Face&) = default;

  // Arbitrary but total; used for ordered containers only.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical face order: larger faces first; equal sizes compare their sorted
/// member lists lexicographically.
inline bool canonical_less(const Face& a, const Face& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa > sb;
  for (std::size_t w = 0; w < Face::kWords; ++w) {
    const std::uint64_t diff = a.words()[w] ^ b.words()[w];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words()[w] & low) != 0;
    }
  }
  return false;
}

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : f.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Ordered list of distinct taxon names. The order fixes taxon indices and
/// therefore the canonical order of faces.
class TaxaSet {
 public:
  TaxaSet() = default;

  explicit TaxaSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxTaxa)
      throw ValidationError("taxa set has " + std::to_string(labels_.size()) +
                            " taxa; at most " + std::to_string(kMaxTaxa) + " are supported");
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) problems.push_back("taxon " + std::to_string(i) + " has an empty name");
      auto [it, inserted] = index_.emplace(labels_[i], i);
      if (!inserted) problems.push_back("duplicate taxon name '" + labels_[i] + "'");
    }
    if (!problems.empty()) throw ValidationError("invalid taxa set", std::move(problems));
  }

  TaxaSet(std::initializer_list<std::string> labels) : TaxaSet(std::vector<std::string>(labels)) {}

  /// Taxa named "0", "1", ..., "n-1".
  static TaxaSet numbered(std::size_t n, const std::string& prefix = "") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return TaxaSet(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown taxon '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  Face all() const { return Face::prefix(size()); }

  Face face(std::initializer_list<std::string> names) const {
    Face f;
    for (const auto& n : names) f.insert(index(n));
    return f;
  }

  Face face(const std::vector<std::string>& names) const {
    Face f;
    for (const auto& n : names) f.insert(index(n));
    return f;
  }

  std::vector<std::string> names(const Face& f) const {
    std::vector<std::string> out;
    f.for_each([&](std::size_t i) { out.push_back(labels_.at(i)); });
    return out;
  }

  /// "{x,y}"
  std::string format(const Face& f) const {
    std::string out = "{";
    bool first = true;
    f.for_each([&](std::size_t i) {
      if (!first) out += ',';
      out += labels_.at(i);
      first = false;
    });
    return out + "}";
  }

  bool within(const Face& f) const { return f.is_subset_of(all()); }

  friend bool operator==(const TaxaSet& a, const TaxaSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline void require_same_universe(const TaxaSet& a, const TaxaSet& b, const char* what) {
  if (!(a == b)) throw ValidationError(std::string(what) + ": operands live over different taxa sets");
}

}  // namespace phylolattice
