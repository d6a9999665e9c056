#pragma once

// Minimal SVG plots: a birth/death diagram and a multi-series line plot.
// Output depends only on the input values, so it is byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "phylolattice/detail/format.hpp"
#include "phylolattice/mergegram.hpp"

namespace phylolattice {

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps [lo, hi] onto [a, b]; a degenerate range maps to the midpoint.
struct Axis {
  double lo, hi, a, b;
  double operator()(double v) const { return hi > lo ? a + (v - lo) / (hi - lo) * (b - a) : (a + b) / 2; }
};

inline void svg_open(std::ostringstream& out, int w, int h, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty())
    out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\">" << xml_escape(title) << "</text>\n";
}

inline void svg_ticks(std::ostringstream& out, const Axis& x, const Axis& y, double y_base, double x_base) {
  for (int k = 0; k <= 4; ++k) {
    const double vx = x.lo + (x.hi - x.lo) * k / 4;
    const double vy = y.lo + (y.hi - y.lo) * k / 4;
    out << "<text x=\"" << svg_num(x(vx)) << "\" y=\"" << svg_num(y_base + 16) << "\" text-anchor=\"middle\">"
        << format_number(vx) << "</text>\n";
    out << "<text x=\"" << svg_num(x_base - 6) << "\" y=\"" << svg_num(y(vy) + 4) << "\" text-anchor=\"end\">"
        << format_number(vy) << "</text>\n";
  }
}

}  // namespace detail

/// Birth/death scatter. A point of multiplicity k gets k - 1 extra rings;
/// infinite deaths sit in a band above the plot area marked "inf".
inline std::string diagram_svg(const Mergegram& m, const std::string& title = "mergegram") {
  constexpr int W = 420, H = 440;
  constexpr double left = 50, right = W - 20, top = 60, bottom = H - 40, band = 36;
  double hi = 0.0;
  double lo = 0.0;
  for (const auto& i : m.intervals()) {
    hi = std::max(hi, i.birth);
    lo = std::min(lo, i.birth);
    if (!i.infinite()) hi = std::max(hi, i.death);
  }
  if (hi == lo) hi = lo + 1.0;
  const detail::Axis x{lo, hi, left, right};
  const detail::Axis y{lo, hi, bottom, top};
  std::ostringstream out;
  detail::svg_open(out, W, H, title);
  out << "<rect x=\"" << left << "\" y=\"" << top - band << "\" width=\"" << right - left << "\" height=\"" << band - 8
      << "\" fill=\"#eeeeee\"/>\n";
  out << "<text x=\"" << left - 6 << "\" y=\"" << top - band / 2 << "\" text-anchor=\"end\">inf</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << detail::svg_num(x(lo)) << "\" y1=\"" << detail::svg_num(y(lo)) << "\" x2=\""
      << detail::svg_num(x(hi)) << "\" y2=\"" << detail::svg_num(y(hi)) << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  detail::svg_ticks(out, x, y, bottom, left);
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << H - 6 << "\" text-anchor=\"middle\">birth</text>\n";
  for (const auto& p : m.points()) {
    const double cx = x(p.interval.birth);
    const double cy = p.interval.infinite() ? top - band / 2 - 4 : y(p.interval.death);
    out << "<circle cx=\"" << detail::svg_num(cx) << "\" cy=\"" << detail::svg_num(cy)
        << "\" r=\"3\" fill=\"#1f5fa8\"/>\n";
    for (std::size_t ring = 1; ring < p.multiplicity; ++ring)
      out << "<circle cx=\"" << detail::svg_num(cx) << "\" cy=\"" << detail::svg_num(cy) << "\" r=\""
          << detail::svg_num(3.0 + 3.0 * static_cast<double>(ring)) << "\" fill=\"none\" stroke=\"#1f5fa8\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

inline std::string line_plot_svg(const std::vector<PlotSeries>& series, const std::string& title,
                                 const std::string& x_label, const std::string& y_label) {
  constexpr int W = 560, H = 380;
  constexpr double left = 60, right = W - 140, top = 40, bottom = H - 40;
  static constexpr const char* kColours[] = {"#1f5fa8", "#c0392b", "#27ae60", "#8e44ad", "#d35400"};
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 0;
  bool first = true;
  for (const auto& s : series)
    for (const auto& [px, py] : s.points) {
      if (first) {
        x_lo = x_hi = px;
        first = false;
      }
      x_lo = std::min(x_lo, px);
      x_hi = std::max(x_hi, px);
      if (std::isfinite(py)) y_hi = std::max(y_hi, py);
    }
  if (y_hi == y_lo) y_hi = y_lo + 1.0;
  const detail::Axis x{x_lo, x_hi, left, right};
  const detail::Axis y{y_lo, y_hi, bottom, top};
  std::ostringstream out;
  detail::svg_open(out, W, H, title);
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
  detail::svg_ticks(out, x, y, bottom, left);
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << H - 6 << "\" text-anchor=\"middle\">"
      << detail::xml_escape(x_label) << "</text>\n";
  out << "<text x=\"14\" y=\"" << (top + bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << (top + bottom) / 2 << ")\">" << detail::xml_escape(y_label) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* colour = kColours[k % std::size(kColours)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[k].points.size(); ++i) {
      const auto& [px, py] = series[k].points[i];
      out << (i ? " " : "") << detail::svg_num(x(px)) << ',' << detail::svg_num(std::isfinite(py) ? y(py) : top);
    }
    out << "\"/>\n";
    for (const auto& [px, py] : series[k].points)
      out << "<circle cx=\"" << detail::svg_num(x(px)) << "\" cy=\"" << detail::svg_num(std::isfinite(py) ? y(py) : top)
          << "\" r=\"2.5\" fill=\"" << colour << "\"/>\n";
    const double ly = top + 18.0 * static_cast<double>(k);
    out << "<line x1=\"" << right + 12 << "\" y1=\"" << ly << "\" x2=\"" << right + 32 << "\" y2=\"" << ly
        << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right + 36 << "\" y=\"" << ly + 4 << "\">" << detail::xml_escape(series[k].name)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace phylolattice
