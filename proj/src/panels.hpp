#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace qilab::detail {

/// Initial panel boundaries for [a, b]: breakpoints inside (a, b) are kept, and any
/// positive segment spanning more than three decades is cut into log-spaced pieces.
std::vector<std::pair<double, double>> initial_panels(double a, double b,
                                                      const std::vector<double>& breakpoints);

/// False once bisection can no longer produce a distinct interior midpoint.
bool splittable(double lo, double hi);

/// Error magnitudes for messages; std::to_string would print 1e-14 as 0.000000.
inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace qilab::detail
