#pragma once

#include <cstdio>
#include <string>

namespace sphspec {

/// Shortest-faithful decimal form used in every CSV/JSON emitter:
/// '.' decimal point, 17 significant digits, no locale dependence.
inline std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace sphspec
