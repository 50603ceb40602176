#include "qboltz/qbm_meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qboltz/indexing.hpp"
#include "qboltz/math_util.hpp"
#include "qboltz/random.hpp"

namespace qboltz {

namespace {

QProductCoords initial_mbar_quantum(const QbmParams& p, const SolverInit& init) {
  const int n = p.n();
  switch (init.kind) {
    case SolverInit::Kind::Zero:
      return QProductCoords::mean(n, std::vector<double>(3 * n, 0.0));
    case SolverInit::Kind::LocalField: {
      std::vector<double> hbar(p.h_raw().begin(), p.h_raw().end());
      return qproduct_to_mean(QProductCoords::field(n, std::move(hbar)));
    }
    case SolverInit::Kind::Explicit: {
      if (static_cast<int>(init.mbar.size()) != 3 * n) {
        throw std::invalid_argument("explicit init has wrong size");
      }
      QProductCoords coords = QProductCoords::mean(n, init.mbar);
      for (int i = 0; i < n; ++i) {
        if (!(coords.site_norm(i) < 1.0)) {
          throw std::domain_error("explicit init site norm outside the unit ball");
        }
      }
      return coords;
    }
    case SolverInit::Kind::RandomSeeded: {
      UniformStream u(init.seed);
      std::vector<double> mbar(3 * n);
      for (double& value : mbar) value = u.next(-0.5, 0.5);
      return QProductCoords::mean(n, std::move(mbar));
    }
  }
  throw std::invalid_argument("unknown solver init kind");
}

// One application of the mean-field map G.
QProductCoords mf_map(const QbmParams& p, const QProductCoords& mbar) {
  return qproduct_to_mean(q_effective_field(p, mbar));
}

// Keeps every site strictly inside the unit ball so the logit stays usable.
void clamp_sites(QProductCoords& coords) {
  for (int i = 0; i < coords.sites; ++i) {
    const double r = coords.site_norm(i);
    if (r > kMeanChartClamp) {
      const double scale = kMeanChartClamp / r;
      for (int c = 0; c < 3; ++c) coords.values[i * 3 + c] *= scale;
    }
  }
}

}  // namespace

QProductCoords q_effective_field(const QbmParams& p, const QProductCoords& mbar) {
  if (mbar.chart != QProductCoords::Chart::Mean) {
    throw std::invalid_argument("expected mean-chart coordinates");
  }
  const int n = p.n();
  if (mbar.sites != n) throw std::invalid_argument("site count mismatch");

  std::vector<double> hbar(static_cast<std::size_t>(n) * 3);
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) {
      double f = p.h(i, s);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int t = 1; t <= 3; ++t) f += p.w(i, j, s, t) * mbar.at(j, t);
      }
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = j + 1; k < n; ++k) {
          if (k == i) continue;
          for (int t = 1; t <= 3; ++t) {
            for (int u = 1; u <= 3; ++u) {
              f += p.v(i, j, k, s, t, u) * mbar.at(j, t) * mbar.at(k, u);
            }
          }
        }
      }
      hbar[i * 3 + (s - 1)] = f;
    }
  }
  return QProductCoords::field(n, std::move(hbar));
}

std::pair<QProductCoords, SolveReport> solve_naive_mf_quantum(
    const QbmParams& p, const SolverConfig& cfg,
    const QIterationObserver& observer) {
  cfg.validate();
  const int n = p.n();
  const double lambda = cfg.damping;

  QProductCoords mbar = initial_mbar_quantum(p, cfg.init);
  QProductCoords mapped = mf_map(p, mbar);

  SolveReport report;
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    double change = 0.0;
    for (int c = 0; c < 3 * n; ++c) {
      const double next =
          (1.0 - lambda) * mbar.values[c] + lambda * mapped.values[c];
      change = std::max(change, std::abs(next - mbar.values[c]));
      mbar.values[c] = next;
    }
    clamp_sites(mbar);
    mapped = mf_map(p, mbar);
    residual = 0.0;
    for (int c = 0; c < 3 * n; ++c) {
      residual = std::max(residual, std::abs(mbar.values[c] - mapped.values[c]));
    }
    report.iterations = iter;
    if (observer) observer(iter, mbar.values);
    if (change <= cfg.tol && residual <= cfg.tol) {
      report.converged = true;
      break;
    }
  }
  report.residual = residual;
  return {std::move(mbar), report};
}

double kl_product_to_qbm(const QProductCoords& coords, const QbmParams& p) {
  const int n = p.n();
  if (coords.sites != n) throw std::invalid_argument("site count mismatch");
  const QProductCoords field = coords.chart == QProductCoords::Chart::Field
                                   ? coords
                                   : qmean_to_product(coords);
  const QProductCoords mean = coords.chart == QProductCoords::Chart::Mean
                                  ? coords
                                  : qproduct_to_mean(coords);

  double acc = -qproduct_log_partition(field);
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) {
      acc += (field.at(i, s) - p.h(i, s)) * mean.at(i, s);
    }
  }
  const auto w = p.w_raw();
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++rank) {
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
          acc -= w[rank * 9 + spin_pair_rank(s, t)] * mean.at(i, s) * mean.at(j, t);
        }
      }
    }
  }
  const auto v = p.v_raw();
  rank = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k, ++rank) {
        for (int s = 1; s <= 3; ++s) {
          for (int t = 1; t <= 3; ++t) {
            for (int u = 1; u <= 3; ++u) {
              acc -= v[rank * 27 + spin_triple_rank(s, t, u)] * mean.at(i, s) *
                     mean.at(j, t) * mean.at(k, u);
            }
          }
        }
      }
    }
  }
  return acc + log_partition_quantum(p);
}

std::pair<QProductCoords, SolveReport> e_project_quantum(
    const QbmParams& p, const SolverConfig& cfg) {
  cfg.validate();

  std::pair<QProductCoords, SolveReport> best{QProductCoords{}, SolveReport{}};
  bool have_best = false;
  for (int candidate = 0; candidate <= cfg.restarts; ++candidate) {
    SolverConfig local = cfg;
    local.restarts = 0;
    if (candidate > 0) {
      local.init = SolverInit::random_seeded(cfg.restart_seed + candidate);
    }
    auto [coords, report] = solve_naive_mf_quantum(p, local);
    report.objective = kl_product_to_qbm(coords, p);
    const bool better = [&] {
      if (!have_best) return true;
      if (report.converged != best.second.converged) return report.converged;
      const bool use_objective = std::isfinite(report.objective) &&
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

QProductCoords m_project_quantum(const QbmParams& p) {
  const QbmMoments eta = exact_moments_quantum(p);
  return QProductCoords::mean(p.n(), eta.m);
}

}  // namespace qboltz
