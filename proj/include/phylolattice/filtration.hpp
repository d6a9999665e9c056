#pragma once

// Filtrations: monotone assignments sigma -> F(sigma) on the non-empty subsets
// of a taxa set, never materialized as 2^|X| tables.
//
// Three backings are provided:
//   * Vietoris–Rips of a phylogenetic network (closed-form diameter);
//   * facegram-backed, F(sigma) = first time some face contains sigma;
//   * an arbitrary monotone function (small universes only).
// Every filtration can produce its facegram (the sublevel complexes' maximal
// faces); it is computed on first use and cached.

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "phylolattice/cliquegram.hpp"
#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

/// A total surjective map source -> target between taxa sets.
class Surjection {
 public:
  Surjection(TaxaSet source, TaxaSet target, std::vector<std::size_t> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.size()) throw ValidationError("surjection: map size differs from the source size");
    Face hit;
    for (std::size_t m : map_) {
      if (m >= target_.size()) throw ValidationError("surjection: image index out of range");
      hit.insert(m);
    }
    if (hit != target_.all()) throw ValidationError("surjection: map does not hit every target taxon");
    for (std::size_t x = 0; x < target_.size(); ++x) {
      Face pre;
      for (std::size_t z = 0; z < map_.size(); ++z)
        if (map_[z] == x) pre.insert(z);
      fibres_.push_back(pre);
    }
  }

  const TaxaSet& source() const { return source_; }
  const TaxaSet& target() const { return target_; }
  std::size_t operator()(std::size_t z) const { return map_[z]; }
  const std::vector<std::size_t>& map() const { return map_; }

  Face image(const Face& kappa) const {
    Face out;
    kappa.for_each([&](std::size_t z) { out.insert(map_[z]); });
    return out;
  }

  Face preimage(const Face& sigma) const {
    Face out;
    sigma.for_each([&](std::size_t x) { out |= fibres_[x]; });
    return out;
  }

 private:
  TaxaSet source_;
  TaxaSet target_;
  std::vector<std::size_t> map_;
  std::vector<Face> fibres_;
};

class Filtration;

namespace detail {

struct FiltrationImpl {
  TaxaSet taxa;
  std::optional<PhyloNetwork> network;
  std::function<double(const Face&)> evaluate;
  std::function<Gram()> build_facegram;
  mutable std::once_flag once;
  mutable std::optional<Gram> facegram;
};

// Facegram of a function on pow(X) by exhaustive enumeration. sigma is a
// maximal face exactly on [F(sigma), min_y F(sigma + y)).
inline Gram facegram_by_enumeration(const TaxaSet& taxa, const std::function<double(const Face&)>& f) {
  const std::size_t n = taxa.size();
  if (n > 20) throw std::length_error("filtration over more than 20 taxa cannot be enumerated");
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> value(count);
  auto face_of = [](std::size_t mask) {
    Face s;
    for (std::size_t b = 0; mask != 0; ++b, mask >>= 1)
      if (mask & 1U) s.insert(b);
    return s;
  };
  for (std::size_t mask = 1; mask < count; ++mask) value[mask] = f(face_of(mask));
  struct Entry {
    std::size_t mask;
    double birth;
    double death;
  };
  std::vector<Entry> entries;
  std::vector<double> times;
  for (std::size_t mask = 1; mask < count; ++mask) {
    double death = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < n; ++b)
      if (!((mask >> b) & 1U)) death = std::min(death, value[mask | (std::size_t{1} << b)]);
    if (value[mask] < death) {
      entries.push_back({mask, value[mask], death});
      times.push_back(value[mask]);
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<GramLevel> levels;
  for (double t : times) {
    std::vector<Face> alive;
    for (const auto& e : entries)
      if (e.birth <= t && t < e.death) alive.push_back(face_of(e.mask));
    levels.push_back({t, FaceSet::from_antichain(std::move(alive))});
  }
  return Gram(taxa, GramKind::facegram, std::move(levels));
}

}  // namespace detail

class Filtration {
 public:
  /// sigma -> max_{x,x' in sigma} N(x,x').
  static Filtration vietoris_rips(PhyloNetwork n) {
    auto impl = std::make_shared<detail::FiltrationImpl>();
    impl->taxa = n.taxa();
    impl->network = std::move(n);
    const detail::FiltrationImpl* raw = impl.get();
    impl->evaluate = [raw](const Face& s) { return vr_value(*raw->network, s); };
    impl->build_facegram = [raw] { return cliquegram_from_network(*raw->network).with_kind(GramKind::facegram); };
    return Filtration(std::move(impl));
  }

  /// sigma -> first critical value at which some face of g contains sigma.
  static Filtration from_facegram(Gram g) {
    auto impl = std::make_shared<detail::FiltrationImpl>();
    impl->taxa = g.taxa();
    impl->facegram = g.kind() == GramKind::facegram ? std::move(g) : g.with_kind(GramKind::facegram);
    std::call_once(impl->once, [] {});
    const detail::FiltrationImpl* raw = impl.get();
    impl->evaluate = [raw](const Face& s) { return raw->facegram->cover_time(s); };
    return Filtration(std::move(impl));
  }

  /// Any function on non-empty faces; monotonicity is the caller's contract.
  /// Its facegram is computed by enumeration (at most 20 taxa).
  static Filtration from_function(TaxaSet taxa, std::function<double(const Face&)> f) {
    auto impl = std::make_shared<detail::FiltrationImpl>();
    impl->taxa = std::move(taxa);
    impl->evaluate = std::move(f);
    const detail::FiltrationImpl* raw = impl.get();
    impl->build_facegram = [raw] { return detail::facegram_by_enumeration(raw->taxa, raw->evaluate); };
    return Filtration(std::move(impl));
  }

  const TaxaSet& taxa() const { return impl_->taxa; }

  double operator()(const Face& sigma) const {
    if (sigma.empty()) throw std::invalid_argument("filtration evaluated on the empty face");
    if (!impl_->taxa.within(sigma)) throw std::invalid_argument("filtration evaluated outside its taxa set");
    return impl_->evaluate(sigma);
  }

  /// The facegram of the filtration (maximal faces of every sublevel complex).
  const Gram& facegram() const {
    std::call_once(impl_->once, [this] { impl_->facegram = impl_->build_facegram(); });
    return *impl_->facegram;
  }

  /// Faces that are maximal at some time, canonically sorted.
  std::vector<Face> appearing_faces() const {
    std::vector<Face> out;
    for (const auto& l : facegram().levels()) out.insert(out.end(), l.faces.begin(), l.faces.end());
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// The network when this is a Vietoris–Rips filtration.
  const PhyloNetwork* network() const { return impl_->network ? &*impl_->network : nullptr; }

 private:
  explicit Filtration(std::shared_ptr<const detail::FiltrationImpl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::FiltrationImpl> impl_;
};

/// (phi^* F)(kappa) = F(phi(kappa)). The pullback of a Vietoris–Rips
/// filtration is the Vietoris–Rips filtration of the pulled-back network.
inline Filtration pullback_filtration(const Filtration& f, const Surjection& phi) {
  require_same_universe(f.taxa(), phi.target(), "pullback_filtration");
  if (const PhyloNetwork* n = f.network()) {
    const std::size_t k = phi.source().size();
    std::vector<double> entries(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) entries[a * k + b] = (*n)(phi(a), phi(b));
    return Filtration::vietoris_rips(PhyloNetwork(phi.source(), std::move(entries)));
  }
  // Maximal faces of a pulled-back complex are the full preimages of the
  // maximal faces downstairs, one for one.
  std::vector<GramLevel> levels;
  for (const auto& l : f.facegram().levels()) {
    std::vector<Face> faces;
    for (const auto& c : l.faces) faces.push_back(phi.preimage(c));
    levels.push_back({l.t, FaceSet::from_antichain(std::move(faces))});
  }
  return Filtration::from_facegram(Gram(phi.source(), GramKind::facegram, std::move(levels)));
}

/// max over non-empty sigma of |F(sigma) - G(sigma)|.
///
/// Every filtration satisfies F(sigma) = min{F(C) : C appearing, C ⊇ sigma}.
/// If F(sigma) >= G(sigma), pick an appearing C ⊇ sigma of G with
/// G(C) = G(sigma); monotonicity gives F(C) - G(C) >= F(sigma) - G(sigma).
/// So the maximum is attained on the union of both appearing-face sets.
/// For two Vietoris–Rips filtrations the dual argument (F(sigma) is attained
/// on a pair inside sigma) reduces the maximum to pairs and singletons.
inline double filtration_interleaving(const Filtration& f, const Filtration& g) {
  require_same_universe(f.taxa(), g.taxa(), "filtration_interleaving");
  double d = 0.0;
  if (f.network() != nullptr && g.network() != nullptr) {
    const auto& a = f.network()->entries();
    const auto& b = g.network()->entries();
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
  }
  for (const auto& faces : {f.appearing_faces(), g.appearing_faces()})
    for (const auto& s : faces) d = std::max(d, std::abs(f(s) - g(s)));
  return d;
}

}  // namespace phylolattice
