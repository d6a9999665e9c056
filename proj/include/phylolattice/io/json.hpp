#pragma once

// JSON documents for grams and mergegrams, tagged "format": "phylolattice/1".
// Keys are emitted sorted and faces/points in canonical order, so equal values
// serialize to identical bytes. Infinite deaths are the string "inf".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/face_set.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/mergegram.hpp"

namespace phylolattice {

inline constexpr std::string_view kFormatTag = "phylolattice/1";

namespace detail {

using nlohmann::json;

inline json face_json(const TaxaSet& taxa, const Face& f) { return taxa.names(f); }

inline json number_json(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  return v;
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw ValidationError("schema violation at " + where + ": " + what);
}

inline const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

inline double read_number(const json& v, const std::string& where, bool allow_inf) {
  if (v.is_number()) return v.get<double>();
  if (allow_inf && v.is_string() && v.get<std::string>() == "inf") return kInfinity;
  schema_error(where, allow_inf ? "expected a number or \"inf\"" : "expected a number");
}

inline json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  const json& tag = member(doc, "format", "document");
  if (!tag.is_string() || tag.get<std::string>() != kFormatTag)
    schema_error("format", "expected \"" + std::string(kFormatTag) + "\"");
  return doc;
}

inline TaxaSet read_taxa(const json& doc) {
  const json& taxa = member(doc, "taxa", "document");
  if (!taxa.is_array()) schema_error("taxa", "expected an array of names");
  std::vector<std::string> names;
  for (const auto& t : taxa) {
    if (!t.is_string()) schema_error("taxa", "expected an array of names");
    names.push_back(t.get<std::string>());
  }
  return TaxaSet(std::move(names));
}

inline Face read_face(const TaxaSet& taxa, const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) schema_error(where, "expected a non-empty array of taxon names");
  Face f;
  for (const auto& name : v) {
    if (!name.is_string()) schema_error(where, "expected taxon names");
    const auto s = name.get<std::string>();
    if (!taxa.contains(s)) schema_error(where, "unknown taxon '" + s + "'");
    if (f.contains(taxa.index(s))) schema_error(where, "repeated taxon '" + s + "'");
    f.insert(taxa.index(s));
  }
  return f;
}

}  // namespace detail

inline std::string gram_to_json(const Gram& g) {
  using detail::json;
  json levels = json::array();
  for (const auto& l : g.levels()) {
    json faces = json::array();
    for (const auto& f : l.faces) faces.push_back(detail::face_json(g.taxa(), f));
    levels.push_back({{"t", l.t}, {"faces", std::move(faces)}});
  }
  const json doc = {{"format", kFormatTag},
                    {"kind", std::string(to_string(g.kind()))},
                    {"taxa", g.taxa().labels()},
                    {"levels", std::move(levels)}};
  return doc.dump(2) + "\n";
}

inline Gram gram_from_json(std::string_view text) {
  const auto doc = detail::parse_document(text);
  const TaxaSet taxa = detail::read_taxa(doc);
  const auto& kind_json = detail::member(doc, "kind", "document");
  if (!kind_json.is_string()) detail::schema_error("kind", "expected a string");
  GramKind kind;
  try {
    kind = gram_kind_from_string(kind_json.get<std::string>());
  } catch (const std::exception& e) {
    detail::schema_error("kind", e.what());
  }
  const auto& levels_json = detail::member(doc, "levels", "document");
  if (!levels_json.is_array()) detail::schema_error("levels", "expected an array");
  std::vector<GramLevel> levels;
  for (std::size_t i = 0; i < levels_json.size(); ++i) {
    const std::string where = "levels[" + std::to_string(i) + "]";
    const double t = detail::read_number(detail::member(levels_json[i], "t", where), where + ".t", false);
    const auto& faces_json = detail::member(levels_json[i], "faces", where);
    if (!faces_json.is_array()) detail::schema_error(where + ".faces", "expected an array");
    std::vector<Face> faces;
    for (std::size_t k = 0; k < faces_json.size(); ++k)
      faces.push_back(detail::read_face(taxa, faces_json[k], where + ".faces[" + std::to_string(k) + "]"));
    levels.push_back({t, FaceSet::from_antichain(std::move(faces))});
  }
  return Gram(taxa, kind, std::move(levels));
}

inline std::string mergegram_to_json(const Mergegram& m) {
  using detail::json;
  json points = json::array();
  for (const auto& p : m.points())
    points.push_back({{"birth", p.interval.birth},
                      {"death", detail::number_json(p.interval.death)},
                      {"mult", p.multiplicity}});
  const json doc = {{"format", kFormatTag}, {"points", std::move(points)}};
  return doc.dump(2) + "\n";
}

inline std::string mergegram_to_json(const LabeledMergegram& m) {
  using detail::json;
  json points = json::array();
  for (const auto& e : m.entries())
    points.push_back({{"birth", e.interval.birth},
                      {"death", detail::number_json(e.interval.death)},
                      {"mult", 1},
                      {"label", detail::face_json(m.taxa(), e.face)}});
  const json doc = {{"format", kFormatTag}, {"taxa", m.taxa().labels()}, {"points", std::move(points)}};
  return doc.dump(2) + "\n";
}

/// A mergegram document; `labeled` is set when every point carries a label.
struct MergegramDocument {
  Mergegram unlabeled;
  std::optional<LabeledMergegram> labeled;
};

inline MergegramDocument mergegram_from_json(std::string_view text) {
  const auto doc = detail::parse_document(text);
  const auto& points = detail::member(doc, "points", "document");
  if (!points.is_array()) detail::schema_error("points", "expected an array");
  std::size_t with_label = 0;
  for (const auto& p : points)
    if (p.is_object() && p.contains("label")) ++with_label;
  if (with_label != 0 && with_label != points.size())
    detail::schema_error("points", "either every point or no point carries a label");
  const bool labeled = with_label != 0 || (points.empty() && doc.contains("taxa"));
  std::optional<TaxaSet> taxa;
  if (labeled) taxa = detail::read_taxa(doc);

  std::vector<Interval> intervals;
  std::vector<LabeledInterval> entries;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const auto& p = points[i];
    const double birth = detail::read_number(detail::member(p, "birth", where), where + ".birth", false);
    const double death = detail::read_number(detail::member(p, "death", where), where + ".death", true);
    if (!(birth < death)) detail::schema_error(where, "birth must be smaller than death");
    const auto& mult = detail::member(p, "mult", where);
    if (!mult.is_number_unsigned() || mult.get<std::size_t>() == 0)
      detail::schema_error(where + ".mult", "expected a positive integer");
    const std::size_t k = mult.get<std::size_t>();
    if (labeled) {
      if (k != 1) detail::schema_error(where + ".mult", "labeled points have multiplicity 1");
      entries.push_back({detail::read_face(*taxa, p.at("label"), where + ".label"), {birth, death}});
    }
    intervals.insert(intervals.end(), k, Interval{birth, death});
  }
  MergegramDocument out{Mergegram(std::move(intervals)), std::nullopt};
  if (labeled) out.labeled = LabeledMergegram(*taxa, std::move(entries));
  return out;
}

}  // namespace phylolattice
