#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace phylolattice::detail {

// Shortest text that parses back to the same double; "inf" for +infinity.
inline std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace phylolattice::detail
