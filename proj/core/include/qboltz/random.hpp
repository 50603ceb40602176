#pragma once

// Reproducible scalar streams on top of std::mt19937_64. The standard pins
// the mt19937_64 state transition, so a fixed seed yields the same 64-bit
// stream everywhere. Gaussians use an explicit Box-Muller transform because
// std::normal_distribution's algorithm is implementation-defined.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qboltz {

// Top 53 bits mapped to [0, 1).
inline double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  // Standard normal variate; Box-Muller pairs, the sine half is cached.
  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 =
        static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = unit_from_bits(engine_());
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next(double lo, double hi) {
    return lo + (hi - lo) * unit_from_bits(engine_());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qboltz
