#pragma once

#include <sstream>
#include <string>

namespace levywn::detail {

// Shortest-round-trip-ish rendering for messages and labels ("%g" style).
inline std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace levywn::detail
