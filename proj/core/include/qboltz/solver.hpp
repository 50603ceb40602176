#pragma once

// Controls and convergence evidence for the damped fixed-point solvers shared
// by the classical and quantum naive mean-field machinery.

#include <cstdint>
#include <limits>
#include <vector>

namespace qboltz {

struct SolverInit {
  enum class Kind { Zero, LocalField, Explicit, RandomSeeded };

  Kind kind = Kind::LocalField;
  std::vector<double> mbar;   // Explicit: magnetizations in model layout
  std::uint64_t seed = 0;     // RandomSeeded

  static SolverInit zero() { return {Kind::Zero, {}, 0}; }
  static SolverInit local_field() { return {Kind::LocalField, {}, 0}; }
  static SolverInit explicit_mean(std::vector<double> values) {
    return {Kind::Explicit, std::move(values), 0};
  }
  // Classical random inits draw each magnetization uniformly from
  // (-0.9, 0.9); quantum ones draw each component from (-0.5, 0.5) so the
  // per-site norm stays below 1.
  static SolverInit random_seeded(std::uint64_t seed) {
    return {Kind::RandomSeeded, {}, seed};
  }
};

struct SolverConfig {
  double damping = 0.5;  // weight on the fresh update, in (0, 1]
  double tol = 1e-10;    // sup-norm residual threshold
  int max_iter = 10000;
  SolverInit init;

  // Projection restarts: candidate 0 runs `init`; candidate r in 1..restarts
  // runs SolverInit::random_seeded(restart_seed + r). The converged candidate
  // of least divergence wins, ties going to the earliest.
  int restarts = 0;
  std::uint64_t restart_seed = 1;

  void validate() const;  // throws std::invalid_argument
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  double residual = std::numeric_limits<double>::quiet_NaN();
  // Exact divergence at the solution when computable (NaN otherwise).
  double objective = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace qboltz
