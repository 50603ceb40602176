#pragma once

// Classical naive mean field: the stationarity residual, the damped tanh
// fixed-point iteration, and the e-/m-projections onto the product family.
// Solver state is call-local; concurrent invocations are independent.

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qboltz/cbm.hpp"
#include "qboltz/solver.hpp"

namespace qboltz {

// Called after each damped update with the current iterate.
using IterationObserver =
    std::function<void(int iteration, std::span<const double> mbar)>;

// Effective local fields h_i + sum_{j != i} w_ij mbar_j
//   + sum_{{j,k} disjoint from i, j<k} v_ijk mbar_j mbar_k.
// Each unordered pair enters once: that is the exact derivative of the
// KL decomposition; an ordered reading would double-count.
std::vector<double> mean_fields_classical(const CbmParams& p,
                                          std::span<const double> mbar);

// Stationarity residual r_i = atanh(mbar_i) - field_i(mbar).
std::vector<double> mf_residual_classical(const CbmParams& p,
                                          const ProductCoords& mbar);

// Damped iteration mbar <- (1 - damping) mbar + damping tanh(field(mbar)).
// Non-convergence is reported, never thrown.
std::pair<ProductCoords, SolveReport> solve_naive_mf_classical(
    const CbmParams& p, const SolverConfig& cfg,
    const IterationObserver& observer = {});

// Fixed point of least exact KL across the configured restarts; the report
// carries D(product || p) when n is within the enumeration cap.
std::pair<ProductCoords, SolveReport> e_project_classical(
    const CbmParams& p, const SolverConfig& cfg);

// Product coordinates matching the exact first moments of p.
ProductCoords m_project_classical(const CbmParams& p);

}  // namespace qboltz
