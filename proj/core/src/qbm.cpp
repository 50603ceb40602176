#include "qboltz/qbm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qboltz/errors.hpp"
#include "qboltz/indexing.hpp"
#include "qboltz/math_util.hpp"

namespace qboltz {

namespace {

void require_site(int n, int i) {
  if (i < 0 || i >= n) {
    throw std::out_of_range("site " + std::to_string(i) +
                            " out of range for n=" + std::to_string(n));
  }
}

void require_spin(int s) {
  if (s < 1 || s > 3) {
    throw std::domain_error("Pauli label must be 1, 2 or 3, got " +
                            std::to_string(s));
  }
}

void require_finite(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("parameter value must be finite");
  }
}

// Sorts two (site, spin) pairs by site.
void sort_pair(int& i, int& j, int& s, int& t) {
  if (i > j) {
    std::swap(i, j);
    std::swap(s, t);
  }
}

// Sorts three (site, spin) pairs by site.
void sort_triple(int& i, int& j, int& k, int& s, int& t, int& u) {
  sort_pair(i, j, s, t);
  sort_pair(j, k, t, u);
  sort_pair(i, j, s, t);
}

}  // namespace

QbmParams::QbmParams(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("site count must be positive");
  if (n > kMaxQuantumSites) {
    throw std::domain_error("site count " + std::to_string(n) +
                            " exceeds the quantum cap of " +
                            std::to_string(kMaxQuantumSites));
  }
  h_.assign(static_cast<std::size_t>(n) * 3, 0.0);
  w_.assign(static_cast<std::size_t>(pair_count(n)) * 9, 0.0);
  v_.assign(static_cast<std::size_t>(triple_count(n)) * 27, 0.0);
}

double QbmParams::h(int i, int s) const {
  require_site(n_, i);
  require_spin(s);
  return h_[i * 3 + (s - 1)];
}

double QbmParams::w(int i, int j, int s, int t) const {
  require_site(n_, i);
  require_site(n_, j);
  require_spin(s);
  require_spin(t);
  if (i == j) return 0.0;
  sort_pair(i, j, s, t);
  return w_[pair_rank(n_, i, j) * 9 + spin_pair_rank(s, t)];
}

double QbmParams::v(int i, int j, int k, int s, int t, int u) const {
  require_site(n_, i);
  require_site(n_, j);
  require_site(n_, k);
  require_spin(s);
  require_spin(t);
  require_spin(u);
  if (i == j || j == k || i == k) return 0.0;
  sort_triple(i, j, k, s, t, u);
  return v_[triple_rank(n_, i, j, k) * 27 + spin_triple_rank(s, t, u)];
}

void QbmParams::set_h(int i, int s, double value) {
  require_site(n_, i);
  require_spin(s);
  require_finite(value);
  h_[i * 3 + (s - 1)] = value;
}

void QbmParams::set_w(int i, int j, int s, int t, double value) {
  require_site(n_, i);
  require_site(n_, j);
  require_spin(s);
  require_spin(t);
  require_finite(value);
  if (i == j) throw std::invalid_argument("coupling sites must be distinct");
  sort_pair(i, j, s, t);
  w_[pair_rank(n_, i, j) * 9 + spin_pair_rank(s, t)] = value;
}

void QbmParams::set_v(int i, int j, int k, int s, int t, int u, double value) {
  require_site(n_, i);
  require_site(n_, j);
  require_site(n_, k);
  require_spin(s);
  require_spin(t);
  require_spin(u);
  require_finite(value);
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("third-order sites must be distinct");
  }
  sort_triple(i, j, k, s, t, u);
  v_[triple_rank(n_, i, j, k) * 27 + spin_triple_rank(s, t, u)] = value;
}

double QbmMoments::m_at(int i, int s) const {
  require_site(n, i);
  require_spin(s);
  return m[i * 3 + (s - 1)];
}

double QbmMoments::mu_at(int i, int j, int s, int t) const {
  require_site(n, i);
  require_site(n, j);
  require_spin(s);
  require_spin(t);
  if (i == j) throw std::invalid_argument("pair moment sites must be distinct");
  sort_pair(i, j, s, t);
  return mu[pair_rank(n, i, j) * 9 + spin_pair_rank(s, t)];
}

double QbmMoments::iota_at(int i, int j, int k, int s, int t, int u) const {
  require_site(n, i);
  require_site(n, j);
  require_site(n, k);
  require_spin(s);
  require_spin(t);
  require_spin(u);
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("triple moment sites must be distinct");
  }
  sort_triple(i, j, k, s, t, u);
  return iota[triple_rank(n, i, j, k) * 27 + spin_triple_rank(s, t, u)];
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : op(std::move(matrix)) {
  if (op.rows() != op.cols() || op.rows() < 2) {
    throw std::invalid_argument("density matrix must be square with dim >= 2");
  }
  const auto dim = static_cast<std::uint64_t>(op.rows());
  if ((dim & (dim - 1)) != 0) {
    throw std::invalid_argument("density matrix dimension must be a power of 2");
  }
  sites_ = 0;
  for (std::uint64_t d = dim; d > 1; d >>= 1) ++sites_;
  if (sites_ > kMaxQuantumSites) {
    throw std::domain_error("density matrix exceeds the quantum site cap");
  }
  const double defect = hermiticity_defect(op);
  if (defect > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  op = 0.5 * (op + op.adjoint()).eval();
  const double trace = op.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw std::invalid_argument("density matrix trace " +
                                std::to_string(trace) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("density matrix eigenvalue check failed");
  }
  if (solver.eigenvalues().minCoeff() <= -1e-12) {
    throw std::invalid_argument("density matrix is not positive definite");
  }
}

double QProductCoords::site_norm(int i) const {
  const double a = values[i * 3];
  const double b = values[i * 3 + 1];
  const double c = values[i * 3 + 2];
  return std::sqrt(a * a + b * b + c * c);
}

QProductCoords QProductCoords::field(int n, std::vector<double> hbar) {
  if (static_cast<int>(hbar.size()) != 3 * n) {
    throw std::invalid_argument("field coordinates need 3 values per site");
  }
  for (double x : hbar) require_finite(x);
  return QProductCoords{Chart::Field, n, std::move(hbar)};
}

QProductCoords QProductCoords::mean(int n, std::vector<double> mbar) {
  if (static_cast<int>(mbar.size()) != 3 * n) {
    throw std::invalid_argument("mean coordinates need 3 values per site");
  }
  for (double x : mbar) require_finite(x);
  return QProductCoords{Chart::Mean, n, std::move(mbar)};
}

Eigen::MatrixXcd qbm_hamiltonian(const QbmParams& p) {
  const int n = p.n();
  const auto dim = std::int64_t{1} << n;
  Eigen::MatrixXcd ham = Eigen::MatrixXcd::Zero(dim, dim);

  const auto h = p.h_raw();
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) {
      const double coeff = h[i * 3 + (s - 1)];
      if (coeff == 0.0) continue;
      const std::array<std::pair<int, int>, 1> factors{{{i, s}}};
      add_pauli_term(ham, n, factors, coeff);
    }
  }

  const auto w = p.w_raw();
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++rank) {
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
          const double coeff = w[rank * 9 + spin_pair_rank(s, t)];
          if (coeff == 0.0) continue;
          const std::array<std::pair<int, int>, 2> factors{{{i, s}, {j, t}}};
          add_pauli_term(ham, n, factors, coeff);
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
              const double coeff = v[rank * 27 + spin_triple_rank(s, t, u)];
              if (coeff == 0.0) continue;
              const std::array<std::pair<int, int>, 3> factors{
                  {{i, s}, {j, t}, {k, u}}};
              add_pauli_term(ham, n, factors, coeff);
            }
          }
        }
      }
    }
  }
  return ham;
}

double log_partition_quantum(const QbmParams& p) {
  const HermitianEigen eig = herm_eig(qbm_hamiltonian(p));
  const std::vector<double> values(eig.values.data(),
                                   eig.values.data() + eig.values.size());
  const double psi = log_sum_exp(values);
  if (!std::isfinite(psi)) throw NumericalError("quantum log-partition overflowed");
  return psi;
}

DensityMatrix density_matrix(const QbmParams& p) {
  const HermitianEigen eig = herm_eig(qbm_hamiltonian(p));
  const std::vector<double> values(eig.values.data(),
                                   eig.values.data() + eig.values.size());
  const double psi = log_sum_exp(values);
  if (!std::isfinite(psi)) throw NumericalError("quantum log-partition overflowed");
  const Eigen::VectorXd weights = (eig.values.array() - psi).exp();
  const Eigen::MatrixXcd rho =
      eig.vectors * weights.asDiagonal() * eig.vectors.adjoint();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

QbmMoments exact_moments_quantum(const QbmParams& p) {
  const int n = p.n();
  const DensityMatrix rho = density_matrix(p);

  QbmMoments out;
  out.n = n;
  out.m.assign(static_cast<std::size_t>(n) * 3, 0.0);
  out.mu.assign(static_cast<std::size_t>(pair_count(n)) * 9, 0.0);
  out.iota.assign(static_cast<std::size_t>(triple_count(n)) * 27, 0.0);

  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) {
      const std::array<std::pair<int, int>, 1> factors{{{i, s}}};
      out.m[i * 3 + (s - 1)] =
          trace_product(rho.op, pauli_string(n, factors));
    }
  }
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++rank) {
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
          const std::array<std::pair<int, int>, 2> factors{{{i, s}, {j, t}}};
          out.mu[rank * 9 + spin_pair_rank(s, t)] =
              trace_product(rho.op, pauli_string(n, factors));
        }
      }
    }
  }
  rank = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k, ++rank) {
        for (int s = 1; s <= 3; ++s) {
          for (int t = 1; t <= 3; ++t) {
            for (int u = 1; u <= 3; ++u) {
              const std::array<std::pair<int, int>, 3> factors{
                  {{i, s}, {j, t}, {k, u}}};
              out.iota[rank * 27 + spin_triple_rank(s, t, u)] =
                  trace_product(rho.op, pauli_string(n, factors));
            }
          }
        }
      }
    }
  }

  for (const auto* vec : {&out.m, &out.mu, &out.iota}) {
    for (double value : *vec) {
      if (!(std::abs(value) <= 1.0 + 1e-9)) {
        throw NumericalError("quantum moment " + std::to_string(value) +
                             " escaped [-1, 1]");
      }
    }
  }
  return out;
}

double quantum_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("density matrix dimension mismatch");
  }
  const Eigen::MatrixXcd diff = herm_logm(rho.op) - herm_logm(sigma.op);
  return trace_product(rho.op, diff);
}

double qproduct_log_partition(const QProductCoords& coords) {
  const QProductCoords& field = coords;
  if (field.chart != QProductCoords::Chart::Field) {
    throw std::invalid_argument("expected field-chart coordinates");
  }
  double psi = 0.0;
  for (int i = 0; i < field.sites; ++i) psi += log_two_cosh(field.site_norm(i));
  return psi;
}

DensityMatrix product_state(const QProductCoords& coords) {
  if (coords.chart != QProductCoords::Chart::Field) {
    throw std::invalid_argument("expected field-chart coordinates");
  }
  const int n = coords.sites;
  if (n > kMaxQuantumSites) {
    throw std::domain_error("site count exceeds the quantum cap");
  }

  Eigen::MatrixXcd tensor = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    Eigen::Matrix2cd local = Eigen::Matrix2cd::Zero();
    for (int s = 1; s <= 3; ++s) local += coords.at(i, s) * pauli(s);
    const double psi_i = log_two_cosh(coords.site_norm(i));
    local -= psi_i * Eigen::Matrix2cd::Identity();
    tensor = Eigen::kroneckerProduct(tensor, herm_expm(local)).eval();
  }

  // Cross-check the tensor-product form against exp of the embedded sum.
  const auto dim = std::int64_t{1} << n;
  Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) {
      const double coeff = coords.at(i, s);
      if (coeff == 0.0) continue;
      const std::array<std::pair<int, int>, 1> factors{{{i, s}}};
      add_pauli_term(embedded, n, factors, coeff);
    }
  }
  embedded -= qproduct_log_partition(coords) *
              Eigen::MatrixXcd::Identity(dim, dim);
  const double gap = (tensor - herm_expm(embedded)).cwiseAbs().maxCoeff();
  if (gap > 1e-10) {
    throw NumericalError("product-state forms disagree by " +
                         std::to_string(gap));
  }
  return DensityMatrix(tensor);
}

QProductCoords qproduct_to_mean(const QProductCoords& coords) {
  if (coords.chart != QProductCoords::Chart::Field) {
    throw std::invalid_argument("expected field-chart coordinates");
  }
  std::vector<double> mbar(coords.values.size());
  for (int i = 0; i < coords.sites; ++i) {
    const double factor = tanh_over_r(coords.site_norm(i));
    for (int c = 0; c < 3; ++c) {
      mbar[i * 3 + c] = factor * coords.values[i * 3 + c];
    }
  }
  return QProductCoords{QProductCoords::Chart::Mean, coords.sites,
                        std::move(mbar)};
}

QProductCoords qmean_to_product(const QProductCoords& coords) {
  if (coords.chart != QProductCoords::Chart::Mean) {
    throw std::invalid_argument("expected mean-chart coordinates");
  }
  std::vector<double> hbar(coords.values.size());
  for (int i = 0; i < coords.sites; ++i) {
    const double r = coords.site_norm(i);
    if (!(r < 1.0)) {
      throw std::domain_error("site magnetization norm " + std::to_string(r) +
                              " outside the open unit ball");
    }
    const double factor = atanh_over_r(std::min(r, kMeanChartClamp));
    for (int c = 0; c < 3; ++c) {
      hbar[i * 3 + c] = factor * coords.values[i * 3 + c];
    }
  }
  return QProductCoords{QProductCoords::Chart::Field, coords.sites,
                        std::move(hbar)};
}

QbmParams qproduct_params(const QProductCoords& coords) {
  const QProductCoords field = coords.chart == QProductCoords::Chart::Field
                                   ? coords
                                   : qmean_to_product(coords);
  QbmParams p(field.sites);
  for (int i = 0; i < field.sites; ++i) {
    for (int s = 1; s <= 3; ++s) p.set_h(i, s, field.at(i, s));
  }
  return p;
}

}  // namespace qboltz
