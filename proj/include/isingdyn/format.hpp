#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace isingdyn {

// Shortest decimal form that parses back to the same double. Integral
// values print without a decimal point so unit-weight energies stay
// readable ("-20" rather than "-2e+01").
inline std::string format_number(double x) {
  if (x == 0.0) return "0";
  if (std::nearbyint(x) == x && std::fabs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", x);
    return buf;
  }
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline std::string format_hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace isingdyn
