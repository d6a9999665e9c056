#pragma once

// Distance-matrix CSV: a header row of taxa labels, then one numeric row per
// taxon in the same order. Rows and columns below are 1-based, counting the
// header as row 1.

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "phylolattice/detail/format.hpp"
#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/network.hpp"

namespace phylolattice {

namespace detail {

// Splits one CSV record; fields may be double-quoted with "" as an escaped quote.
inline std::vector<std::string> split_csv_record(std::string_view line, std::size_t row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", row, line.size() + 1);
  return fields;
}

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline PhyloNetwork parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = text.substr(start, end - start);
    if (detail::trim(std::string(line)).empty()) {
      start = end + 1;
      continue;
    }
    auto fields = detail::split_csv_record(line, line_no);
    for (auto& f : fields) f = detail::trim(std::move(f));
    rows.push_back(std::move(fields));
    line_numbers.push_back(line_no);
    start = end + 1;
  }
  if (rows.empty()) throw ParseError("empty matrix file", 1, 1);

  const std::vector<std::string>& header = rows.front();
  const std::size_t n = header.size();
  for (std::size_t c = 0; c < n; ++c)
    if (header[c].empty()) throw ParseError("empty taxon label in header", line_numbers[0], c + 1);
  TaxaSet taxa = [&] {
    try {
      return TaxaSet(header);
    } catch (const ValidationError& e) {
      throw ParseError(std::string("header: ") + e.what(), line_numbers[0], 1);
    }
  }();
  if (rows.size() - 1 != n)
    throw ParseError("expected " + std::to_string(n) + " data rows, found " + std::to_string(rows.size() - 1),
                     line_numbers.back(), 1);

  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != n)
      throw ParseError("ragged row: expected " + std::to_string(n) + " cells, found " + std::to_string(row.size()),
                       line_numbers[r], 1);
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& cell = row[c];
      double value = 0.0;
      const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || end != cell.data() + cell.size())
        throw ParseError("non-numeric cell '" + cell + "'", line_numbers[r], c + 1);
      entries.push_back(value);
    }
  }

  std::vector<std::string> problems;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries[i * n + j];
      const std::string where = "cell (" + std::to_string(line_numbers[i + 1]) + "," + std::to_string(j + 1) + ")";
      if (!std::isfinite(v)) problems.push_back(where + ": non-finite value");
      else if (j > i && v != entries[j * n + i])
        problems.push_back(where + ": asymmetric, differs from cell (" + std::to_string(line_numbers[j + 1]) + "," +
                           std::to_string(i + 1) + ")");
      else if (i != j && std::isfinite(entries[i * n + i]) && entries[i * n + i] > v)
        problems.push_back(where + ": below the diagonal entry of row " + std::to_string(line_numbers[i + 1]));
    }
  if (!problems.empty()) throw ValidationError("invalid phylogenetic network", std::move(problems));
  return PhyloNetwork(std::move(taxa), std::move(entries));
}

inline std::string serialize_matrix_csv(const PhyloNetwork& n) {
  std::ostringstream out;
  const std::size_t k = n.size();
  for (std::size_t j = 0; j < k; ++j) out << (j ? "," : "") << detail::csv_quote(n.taxa().label(j));
  out << '\n';
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out << (j ? "," : "") << detail::format_number(n(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace phylolattice
