#pragma once

// Quantum naive mean field: the effective-field map, the damped fixed-point
// iteration in the mean chart, the closed-form divergence from a product
// state to a third-order model, and the e-/m-projections onto S1.

#include <functional>
#include <span>
#include <utility>

#include "qboltz/qbm.hpp"
#include "qboltz/solver.hpp"

namespace qboltz {

using QIterationObserver =
    std::function<void(int iteration, std::span<const double> mbar)>;

// hbar_is = h_is + sum_{j != i} sum_t w_ijst mbar_jt
//         + sum_{{j,k} disjoint from i, j<k} sum_{t,u} v_ijkstu mbar_jt mbar_ku,
// couplings read through the symmetrized canonical store.
QProductCoords q_effective_field(const QbmParams& p, const QProductCoords& mbar);

// Damped iteration of G = qproduct_to_mean(q_effective_field(.)); on
// convergence the simultaneous residual of both mean-field equations is
// below tol. Non-convergence is reported, never thrown.
std::pair<QProductCoords, SolveReport> solve_naive_mf_quantum(
    const QbmParams& p, const SolverConfig& cfg,
    const QIterationObserver& observer = {});

// Closed form of D(tau || rho_p) = Tr[tau (log tau - log rho_p)] on product
// states: sum hbar mbar - psi(hbar) - sum h mbar - sum w mbar mbar
// - sum v mbar mbar mbar + psi(h, w, v). Accepts either chart.
double kl_product_to_qbm(const QProductCoords& coords, const QbmParams& p);

// Fixed point of least divergence across the configured restarts; the report
// carries the exact divergence.
std::pair<QProductCoords, SolveReport> e_project_quantum(const QbmParams& p,
                                                         const SolverConfig& cfg);

// Mean coordinates matching the exact first moments of p.
QProductCoords m_project_quantum(const QbmParams& p);

}  // namespace qboltz
