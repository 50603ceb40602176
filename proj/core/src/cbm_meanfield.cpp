#include "qboltz/cbm_meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qboltz/math_util.hpp"
#include "qboltz/random.hpp"

namespace qboltz {

void SolverConfig::validate() const {
  if (!(damping > 0.0 && damping <= 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1]");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (restarts < 0) throw std::invalid_argument("restarts must be nonnegative");
}

namespace {

std::vector<double> initial_mbar_classical(const CbmParams& p,
                                           const SolverInit& init) {
  const int n = p.n();
  switch (init.kind) {
    case SolverInit::Kind::Zero:
      return std::vector<double>(n, 0.0);
    case SolverInit::Kind::LocalField: {
      std::vector<double> mbar(n);
      for (int i = 0; i < n; ++i) mbar[i] = std::tanh(p.h(i));
      return mbar;
    }
    case SolverInit::Kind::Explicit: {
      if (static_cast<int>(init.mbar.size()) != n) {
        throw std::invalid_argument("explicit init has wrong size");
      }
      for (double m : init.mbar) {
        if (!(std::abs(m) < 1.0)) {
          throw std::domain_error("explicit init magnetization outside (-1, 1)");
        }
      }
      return init.mbar;
    }
    case SolverInit::Kind::RandomSeeded: {
      UniformStream u(init.seed);
      std::vector<double> mbar(n);
      for (int i = 0; i < n; ++i) mbar[i] = u.next(-0.9, 0.9);
      return mbar;
    }
  }
  throw std::invalid_argument("unknown solver init kind");
}

}  // namespace

std::vector<double> mean_fields_classical(const CbmParams& p,
                                          std::span<const double> mbar) {
  const int n = p.n();
  if (static_cast<int>(mbar.size()) != n) {
    throw std::invalid_argument("magnetization size mismatch");
  }
  std::vector<double> field(n);
  for (int i = 0; i < n; ++i) {
    double f = p.h(i);
    for (int j = 0; j < n; ++j) {
      if (j != i) f += p.w(i, j) * mbar[j];
    }
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        f += p.v(i, j, k) * mbar[j] * mbar[k];
      }
    }
    field[i] = f;
  }
  return field;
}

std::vector<double> mf_residual_classical(const CbmParams& p,
                                          const ProductCoords& mbar) {
  if (mbar.chart != ProductCoords::Chart::Mean) {
    throw std::invalid_argument("expected mean-chart coordinates");
  }
  const std::vector<double> field = mean_fields_classical(p, mbar.values);
  std::vector<double> residual(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    residual[i] = clamped_atanh(mbar.values[i]) - field[i];
  }
  return residual;
}

std::pair<ProductCoords, SolveReport> solve_naive_mf_classical(
    const CbmParams& p, const SolverConfig& cfg,
    const IterationObserver& observer) {
  cfg.validate();
  const int n = p.n();
  const double lambda = cfg.damping;

  std::vector<double> mbar = initial_mbar_classical(p, cfg.init);
  std::vector<double> field = mean_fields_classical(p, mbar);

  SolveReport report;
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      double next = (1.0 - lambda) * mbar[i] + lambda * std::tanh(field[i]);
      next = std::clamp(next, -kMeanChartClamp, kMeanChartClamp);
      change = std::max(change, std::abs(next - mbar[i]));
      mbar[i] = next;
    }
    field = mean_fields_classical(p, mbar);
    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual,
                          std::abs(clamped_atanh(mbar[i]) - field[i]));
    }
    report.iterations = iter;
    if (observer) observer(iter, mbar);
    if (change <= cfg.tol && residual <= cfg.tol) {
      report.converged = true;
      break;
    }
  }
  report.residual = residual;
  return {ProductCoords::mean(std::move(mbar)), report};
}

std::pair<ProductCoords, SolveReport> e_project_classical(
    const CbmParams& p, const SolverConfig& cfg) {
  cfg.validate();
  const bool kl_available = p.n() <= kMaxClassicalSites;

  std::pair<ProductCoords, SolveReport> best{ProductCoords{}, SolveReport{}};
  bool have_best = false;
  for (int candidate = 0; candidate <= cfg.restarts; ++candidate) {
    SolverConfig local = cfg;
    local.restarts = 0;
    if (candidate > 0) {
      local.init = SolverInit::random_seeded(cfg.restart_seed + candidate);
    }
    auto [coords, report] = solve_naive_mf_classical(p, local);
    if (kl_available) {
      report.objective = kl_divergence(product_params(coords), p);
    }
    const bool better = [&] {
      if (!have_best) return true;
      if (report.converged != best.second.converged) return report.converged;
      const bool use_objective = kl_available &&
                                 std::isfinite(report.objective) &&
                                 std::isfinite(best.second.objective);
      const double key = use_objective ? report.objective : report.residual;
      const double best_key =
          use_objective ? best.second.objective : best.second.residual;
      return key < best_key;
    }();
    if (better) {
      best = {std::move(coords), report};
      have_best = true;
    }
  }
  return best;
}

ProductCoords m_project_classical(const CbmParams& p) {
  const CbmMoments eta = exact_moments_classical(p);
  return ProductCoords::mean(eta.m);
}

}  // namespace qboltz
