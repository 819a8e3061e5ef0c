#pragma once

#include <cmath>

namespace isingdyn {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kTwoPi = 2.0 * kPi;

// Wrap into [0, 2pi).
inline double wrap_phase(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

namespace detail {

// Index q in [0,4) such that phi == q*(pi/2) bitwise, or -1 otherwise.
// Quarter-turn phases get table-exact trig below, which makes every
// Type I configuration an exact fixed point of both models.
inline int quarter_index(double phi) {
  const double q = std::nearbyint(phi / kHalfPi);
  if (!(q >= -4.0e15 && q <= 4.0e15)) return -1;
  if (q * kHalfPi != phi) return -1;
  const long long k = static_cast<long long>(q);
  return static_cast<int>(((k % 4) + 4) % 4);
}

inline constexpr double kQuarterSin[4] = {0.0, 1.0, 0.0, -1.0};
inline constexpr double kQuarterCos[4] = {1.0, 0.0, -1.0, 0.0};

// sin(a + s*b), s = +1 or -1; exact when both phases are quarter turns.
inline double pair_sin(double a, double b, int qa, int qb, int s) {
  if (qa >= 0 && qb >= 0) return kQuarterSin[((qa + s * qb) % 4 + 4) % 4];
  return std::sin(a + s * b);
}

inline double pair_cos(double a, double b, int qa, int qb, int s) {
  if (qa >= 0 && qb >= 0) return kQuarterCos[((qa + s * qb) % 4 + 4) % 4];
  return std::cos(a + s * b);
}

inline double double_sin(double a, int qa) {
  if (qa >= 0) return kQuarterSin[(2 * qa) % 4];
  return std::sin(2.0 * a);
}

inline double double_cos(double a, int qa) {
  if (qa >= 0) return kQuarterCos[(2 * qa) % 4];
  return std::cos(2.0 * a);
}

}  // namespace detail
}  // namespace isingdyn
