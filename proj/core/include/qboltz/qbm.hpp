#pragma once

// Third-order quantum Boltzmann machine: Hamiltonian assembly from Pauli
// strings, Gibbs density matrices, the quantum log-partition function,
// expectation coordinates, relative entropy, and the product-state family
// with its two charts.
//
// Site tuples are stored strictly increasing; the symmetric accessors sort
// the sites and permute the spin labels with them.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qboltz/tensor_ops.hpp"

namespace qboltz {

class QbmParams {
 public:
  explicit QbmParams(int n);  // enforces 1 <= n <= kMaxQuantumSites

  int n() const { return n_; }

  double h(int i, int s) const;
  double w(int i, int j, int s, int t) const;  // 0 when i == j
  double v(int i, int j, int k, int s, int t, int u) const;

  void set_h(int i, int s, double value);
  void set_w(int i, int j, int s, int t, double value);
  void set_v(int i, int j, int k, int s, int t, int u, double value);

  // Canonical flat storage: h site-major with 3 spins per site, w per sorted
  // pair rank with 9 spin pairs, v per sorted triple rank with 27 triples.
  std::span<const double> h_raw() const { return h_; }
  std::span<const double> w_raw() const { return w_; }
  std::span<const double> v_raw() const { return v_; }

 private:
  int n_;
  std::vector<double> h_, w_, v_;
};

// Expectation coordinates dual to QbmParams, same canonical layout.
struct QbmMoments {
  int n = 0;
  std::vector<double> m, mu, iota;

  double m_at(int i, int s) const;
  double mu_at(int i, int j, int s, int t) const;
  double iota_at(int i, int j, int k, int s, int t, int u) const;
};

// Strictly positive unit-trace Hermitian operator. The constructor
// symmetrizes and validates; genuine indefiniteness is rejected while
// eigensolver noise down to -1e-12 is tolerated.
struct DensityMatrix {
  Eigen::MatrixXcd op;

  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  int sites() const { return sites_; }
  Eigen::Index dim() const { return op.rows(); }

 private:
  int sites_ = 0;
};

// A point of the product family S1 in one of its two charts; values are
// site-major with 3 components per site.
struct QProductCoords {
  enum class Chart { Field, Mean };

  Chart chart = Chart::Mean;
  int sites = 0;
  std::vector<double> values;

  double at(int i, int s) const { return values[i * 3 + (s - 1)]; }
  double& at(int i, int s) { return values[i * 3 + (s - 1)]; }

  // Euclidean norm of the 3-vector at one site.
  double site_norm(int i) const;

  static QProductCoords field(int n, std::vector<double> hbar);
  static QProductCoords mean(int n, std::vector<double> mbar);
};

// H = sum h_is sigma_is + sum_{i<j} w_ijst sigma_is sigma_jt
//   + sum_{i<j<k} v_ijkstu sigma_is sigma_jt sigma_ku.
Eigen::MatrixXcd qbm_hamiltonian(const QbmParams& p);

// psi(h, w, v) = log Tr exp H, from the spectrum with log-sum-exp shift.
double log_partition_quantum(const QbmParams& p);

// rho = exp(H - psi I); unit trace and strictly positive by construction.
DensityMatrix density_matrix(const QbmParams& p);

// m_is = Tr[rho sigma_is], mu_ijst = Tr[rho sigma_is sigma_jt],
// iota_ijkstu = Tr[rho sigma_is sigma_jt sigma_ku]. Observables are built
// lazily per index rather than materialized all at once.
QbmMoments exact_moments_quantum(const QbmParams& p);

// D(rho || sigma) = Tr[rho (log rho - log sigma)] >= 0; swap the arguments
// for the reverse orientation.
double quantum_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma);

// Per-site log-partition sum: psi(hbar) = sum_i log(e^{r_i} + e^{-r_i})
// with r_i = ||hbar_i||.
double qproduct_log_partition(const QProductCoords& coords);

// tau = (x)_i exp{sum_s hbar_is sigma_s - psi_i}; the tensor-product form is
// cross-checked against exp of the embedded sum to 1e-10.
DensityMatrix product_state(const QProductCoords& coords);

// mbar_is = (hbar_is / ||hbar_i||) tanh(||hbar_i||), series near zero.
QProductCoords qproduct_to_mean(const QProductCoords& coords);

// hbar_is = (mbar_is / ||mbar_i||) atanh(||mbar_i||), clamped just inside
// the unit ball; ||mbar_i|| >= 1 is a domain error.
QProductCoords qmean_to_product(const QProductCoords& coords);

// The S1 member as a QbmParams (local fields only, no couplings).
QbmParams qproduct_params(const QProductCoords& coords);

}  // namespace qboltz
