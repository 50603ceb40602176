#pragma once

// Third-order classical Boltzmann machine over +-1 spins: exact
// probabilities, log-partition function, expectation coordinates, entropies,
// KL divergence, and the product-family coordinate charts.
//
// Everything here enumerates all 2^n configurations, so the site count is
// capped; operations beyond the cap fail fast rather than thrash.

#include <cstdint>
#include <span>
#include <vector>

namespace qboltz {

inline constexpr int kMaxClassicalSites = 20;

struct SpinConfig {
  std::vector<int> spins;  // each exactly -1 or +1

  int n() const { return static_cast<int>(spins.size()); }

  // Configuration for a basis index: site 0 is the most significant bit and
  // bit 0 means spin +1, matching the quantum computational-basis order.
  static SpinConfig from_basis_index(int n, std::uint64_t index);
};

// Natural coordinates (h, w, v). Couplings are stored once per strictly
// increasing site tuple; accessors symmetrize and return 0 on repeated sites.
class CbmParams {
 public:
  explicit CbmParams(int n);

  int n() const { return n_; }

  double h(int i) const;
  double w(int i, int j) const;
  double v(int i, int j, int k) const;

  void set_h(int i, double value);
  void set_w(int i, int j, double value);         // i != j
  void set_v(int i, int j, int k, double value);  // all distinct

  // Canonical flat storage: h per site, w per sorted pair rank, v per sorted
  // triple rank.
  std::span<const double> h_raw() const { return h_; }
  std::span<const double> w_raw() const { return w_; }
  std::span<const double> v_raw() const { return v_; }

 private:
  int n_;
  std::vector<double> h_, w_, v_;
};

// Expectation coordinates dual to CbmParams, same canonical layout.
struct CbmMoments {
  int n = 0;
  std::vector<double> m, mu, iota;

  double m_at(int i) const;
  double mu_at(int i, int j) const;
  double iota_at(int i, int j, int k) const;
};

// A point of the product family P1 in one of its two charts.
struct ProductCoords {
  enum class Chart { Field, Mean };  // Field stores hbar, Mean stores mbar

  Chart chart = Chart::Mean;
  std::vector<double> values;

  int n() const { return static_cast<int>(values.size()); }

  static ProductCoords field(std::vector<double> hbar);
  static ProductCoords mean(std::vector<double> mbar);
};

// Interaction energy sum_i h_i x_i + sum_{i<j} w_ij x_i x_j
//                  + sum_{i<j<k} v_ijk x_i x_j x_k.
double interaction_energy(const CbmParams& p, const SpinConfig& x);

// Interaction energies of all 2^n configurations in basis-index order.
std::vector<double> config_energies(const CbmParams& p);

// psi(h, w, v), log-sum-exp stabilized.
double log_partition_classical(const CbmParams& p);

// Equilibrium probability of one configuration; strictly positive.
double prob(const CbmParams& p, const SpinConfig& x);

// All first, second and third moments by enumeration.
CbmMoments exact_moments_classical(const CbmParams& p);

// sum_x p(x) log p(x); cross-checked internally against the dual form
// sum v iota + sum w mu + sum h m - psi to 1e-10.
double neg_entropy(const CbmParams& p);

// D(q || p) = sum_x q(x) log(q(x)/p(x)) >= 0.
double kl_divergence(const CbmParams& q, const CbmParams& p);

// mbar_i = tanh(hbar_i).
ProductCoords product_to_mean(const ProductCoords& coords);

// hbar_i = atanh(mbar_i), clamped just inside the open unit interval.
ProductCoords mean_to_product(const ProductCoords& coords);

// Negative entropy of the product distribution with magnetizations mbar.
double product_entropy(const ProductCoords& coords);

// The P1 member as a CbmParams (thresholds only, no couplings).
CbmParams product_params(const ProductCoords& coords);

}  // namespace qboltz
