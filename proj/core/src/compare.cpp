#include "qboltz/compare.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qboltz/cbm_meanfield.hpp"
#include "qboltz/qbm_meanfield.hpp"

namespace qboltz {

namespace {

ComparisonReport compare_classical(const ModelFile& model, const SolverConfig& cfg) {
  const CbmParams p = to_cbm_params(model);
  const CbmMoments exact = exact_moments_classical(p);
  auto [eproj, report] = e_project_classical(p, cfg);
  const ProductCoords mproj = m_project_classical(p);

  ComparisonReport out;
  out.kind = ModelKind::Classical;
  out.n = p.n();
  out.solver = report;
  out.divergence_eproj = report.objective;
  out.divergence_mproj = kl_divergence(p, product_params(mproj));
  for (int i = 0; i < p.n(); ++i) {
    ComparisonRow row;
    row.site = i;
    row.axis = 0;
    row.exact = exact.m[i];
    row.eproj = eproj.values[i];
    row.mproj = mproj.values[i];
    row.abs_error = std::abs(row.exact - row.eproj);
    out.rows.push_back(row);
  }
  return out;
}

ComparisonReport compare_quantum(const ModelFile& model, const SolverConfig& cfg) {
  const QbmParams p = to_qbm_params(model);
  const QbmMoments exact = exact_moments_quantum(p);
  auto [eproj, report] = e_project_quantum(p, cfg);
  const QProductCoords mproj = m_project_quantum(p);

  ComparisonReport out;
  out.kind = ModelKind::Quantum;
  out.n = p.n();
  out.solver = report;
  out.divergence_eproj = report.objective;
  out.divergence_mproj = quantum_relative_entropy(
      density_matrix(p), product_state(qmean_to_product(mproj)));
  for (int i = 0; i < p.n(); ++i) {
    for (int s = 1; s <= 3; ++s) {
      ComparisonRow row;
      row.site = i;
      row.axis = s;
      row.exact = exact.m_at(i, s);
      row.eproj = eproj.at(i, s);
      row.mproj = mproj.at(i, s);
      row.abs_error = std::abs(row.exact - row.eproj);
      out.rows.push_back(row);
    }
  }
  return out;
}

int sweep_threads(std::size_t points) {
  int threads = 0;
  if (const char* env = std::getenv("QBOLTZ_NUM_THREADS")) {
    threads = std::atoi(env);
  }
  if (threads < 1) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  return std::min<int>(threads, static_cast<int>(points));
}

}  // namespace

ComparisonReport run_compare(const ModelFile& model, const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ComparisonReport out = model.kind == ModelKind::Classical
                             ? compare_classical(model, cfg)
                             : compare_quantum(model, cfg);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::vector<SweepPoint> run_sweep(const ModelFile& base,
                                  std::span<const double> grid,
                                  const SolverConfig& cfg) {
  if (grid.empty()) throw std::invalid_argument("sweep grid must be nonempty");
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (!(grid[g] > grid[g - 1])) {
      throw std::invalid_argument("sweep grid must be strictly ascending");
    }
  }

  std::vector<SweepPoint> points(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  const int threads = sweep_threads(grid.size());

  auto worker = [&](int offset) {
    for (std::size_t g = offset; g < grid.size(); g += threads) {
      try {
        points[g].scale = grid[g];
        points[g].report = run_compare(scale_couplings(base, grid[g]), cfg);
      } catch (...) {
        failures[g] = std::current_exception();
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }

  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return points;
}

}  // namespace qboltz
