#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace qboltz {

// Magnetizations are clamped this far inside (-1, 1) before any logit; the
// logit is singular at +-1 and fixed-point iterates can graze the boundary.
inline constexpr double kMeanChartClamp = 1.0 - 1e-12;

// atanh as the half-log ratio with the module-wide clamp. |x| >= 1 is a
// domain error; values between the clamp and 1 saturate at the clamp.
inline double clamped_atanh(double x) {
  if (!(std::abs(x) < 1.0)) {
    throw std::domain_error("magnetization " + std::to_string(x) +
                            " outside the open unit interval");
  }
  const double c = std::clamp(x, -kMeanChartClamp, kMeanChartClamp);
  return 0.5 * std::log((1.0 + c) / (1.0 - c));
}

// Shifted by the maximum exponent so arbitrarily large parameters stay finite.
inline double log_sum_exp(std::span<const double> xs) {
  double top = -std::numeric_limits<double>::infinity();
  for (double x : xs) top = std::max(top, x);
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - top);
  return top + std::log(acc);
}

// tanh(r)/r for r >= 0; series below 1e-6 where the quotient loses accuracy.
inline double tanh_over_r(double r) {
  if (r < 1e-6) return 1.0 - r * r / 3.0;
  return std::tanh(r) / r;
}

// atanh(r)/r for 0 <= r < 1, with the same series treatment near zero.
inline double atanh_over_r(double r) {
  if (r < 1e-6) return 1.0 + r * r / 3.0;
  return clamped_atanh(r) / r;
}

// x log x with the continuous extension 0 log 0 := 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// log(e^r + e^-r) without overflow.
inline double log_two_cosh(double r) {
  const double a = std::abs(r);
  return a + std::log1p(std::exp(-2.0 * a));
}

}  // namespace qboltz
