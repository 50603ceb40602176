#pragma once

// End-to-end runs: exact moments vs both projections for one model, and
// coupling-scale sweeps over a rescaled base model. Grid points are
// independent; sweeps may evaluate them concurrently (QBOLTZ_NUM_THREADS
// overrides the worker count) with results assembled in grid order.

#include <span>
#include <vector>

#include "qboltz/model_io.hpp"
#include "qboltz/solver.hpp"

namespace qboltz {

struct ComparisonRow {
  int site = 0;  // 0-based in memory; writers print 1-based
  int axis = 0;  // Pauli label for quantum rows, 0 for classical
  double exact = 0.0;
  double eproj = 0.0;
  double mproj = 0.0;
  double abs_error = 0.0;  // |exact - eproj|
};

struct ComparisonReport {
  ModelKind kind = ModelKind::Classical;
  int n = 0;
  std::vector<ComparisonRow> rows;
  SolveReport solver;            // from the e-projection
  double divergence_eproj = 0.0;  // D(product_e || model)
  double divergence_mproj = 0.0;  // D(model || product_m)
  // Measured, never serialized, so emitted reports stay byte-stable.
  double wall_seconds = 0.0;
};

ComparisonReport run_compare(const ModelFile& model, const SolverConfig& cfg);

struct SweepPoint {
  double scale = 1.0;
  ComparisonReport report;
};

// One report per grid value, couplings of `base` rescaled by the value;
// the grid must be nonempty and strictly ascending.
std::vector<SweepPoint> run_sweep(const ModelFile& base,
                                  std::span<const double> grid,
                                  const SolverConfig& cfg);

}  // namespace qboltz
