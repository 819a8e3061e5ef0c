#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "isingdyn/phase.hpp"

namespace isingdyn {

// splitmix64 finalizer. Part of the report schema: the constants below
// must never change or replays of old manifests break.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Per-trial seed: splitmix64(splitmix64(base) ^ (trial+1)*0x9e3779b97f4a7c15).
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) {
  return splitmix64(splitmix64(base_seed) ^ ((trial + 1) * 0x9e3779b97f4a7c15ull));
}

// Uniform double in [0,1) from the top 53 bits of the engine output.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = eng();
    if (r >= threshold) return r % bound;
  }
}

// Standard normal stream (Box-Muller with cached second draw). Hand-rolled
// so noise sequences do not depend on the standard library's
// normal_distribution implementation.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(eng_);
    double u2 = uniform01(eng_);
    while (u1 <= 0.0) u1 = uniform01(eng_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = kTwoPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// i.i.d. phases uniform on [0, 2pi).
inline std::vector<double> random_phases(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> phi(static_cast<std::size_t>(n));
  for (double& p : phi) p = kTwoPi * uniform01(eng);
  return phi;
}

// FNV-1a over raw bytes.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace isingdyn
