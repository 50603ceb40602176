#include "qboltz/cbm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qboltz/errors.hpp"
#include "qboltz/indexing.hpp"
#include "qboltz/math_util.hpp"

namespace qboltz {

namespace {

void require_enumerable(int n) {
  if (n > kMaxClassicalSites) {
    throw std::domain_error("site count " + std::to_string(n) +
                            " exceeds the classical enumeration cap of " +
                            std::to_string(kMaxClassicalSites));
  }
}

void require_finite(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("parameter value must be finite");
  }
}

void require_site(int n, int i) {
  if (i < 0 || i >= n) {
    throw std::out_of_range("site " + std::to_string(i) +
                            " out of range for n=" + std::to_string(n));
  }
}

void sort2(int& a, int& b) {
  if (a > b) std::swap(a, b);
}

}  // namespace

SpinConfig SpinConfig::from_basis_index(int n, std::uint64_t index) {
  SpinConfig x;
  x.spins.resize(n);
  for (int i = 0; i < n; ++i) {
    x.spins[i] = ((index >> (n - 1 - i)) & 1) ? -1 : +1;
  }
  return x;
}

CbmParams::CbmParams(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("site count must be positive");
  h_.assign(n, 0.0);
  w_.assign(pair_count(n), 0.0);
  v_.assign(triple_count(n), 0.0);
}

double CbmParams::h(int i) const {
  require_site(n_, i);
  return h_[i];
}

double CbmParams::w(int i, int j) const {
  require_site(n_, i);
  require_site(n_, j);
  if (i == j) return 0.0;
  sort2(i, j);
  return w_[pair_rank(n_, i, j)];
}

double CbmParams::v(int i, int j, int k) const {
  require_site(n_, i);
  require_site(n_, j);
  require_site(n_, k);
  if (i == j || j == k || i == k) return 0.0;
  sort2(i, j);
  sort2(j, k);
  sort2(i, j);
  return v_[triple_rank(n_, i, j, k)];
}

void CbmParams::set_h(int i, double value) {
  require_site(n_, i);
  require_finite(value);
  h_[i] = value;
}

void CbmParams::set_w(int i, int j, double value) {
  require_site(n_, i);
  require_site(n_, j);
  require_finite(value);
  if (i == j) throw std::invalid_argument("coupling sites must be distinct");
  sort2(i, j);
  w_[pair_rank(n_, i, j)] = value;
}

void CbmParams::set_v(int i, int j, int k, double value) {
  require_site(n_, i);
  require_site(n_, j);
  require_site(n_, k);
  require_finite(value);
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("third-order sites must be distinct");
  }
  sort2(i, j);
  sort2(j, k);
  sort2(i, j);
  v_[triple_rank(n_, i, j, k)] = value;
}

double CbmMoments::m_at(int i) const {
  require_site(n, i);
  return m[i];
}

double CbmMoments::mu_at(int i, int j) const {
  require_site(n, i);
  require_site(n, j);
  if (i == j) return 1.0;  // x_i^2 = 1
  sort2(i, j);
  return mu[pair_rank(n, i, j)];
}

double CbmMoments::iota_at(int i, int j, int k) const {
  require_site(n, i);
  require_site(n, j);
  require_site(n, k);
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("third-order moment sites must be distinct");
  }
  sort2(i, j);
  sort2(j, k);
  sort2(i, j);
  return iota[triple_rank(n, i, j, k)];
}

ProductCoords ProductCoords::field(std::vector<double> hbar) {
  for (double x : hbar) require_finite(x);
  return ProductCoords{Chart::Field, std::move(hbar)};
}

ProductCoords ProductCoords::mean(std::vector<double> mbar) {
  for (double x : mbar) {
    if (!(std::abs(x) <= 1.0)) {
      throw std::domain_error("magnetization " + std::to_string(x) +
                              " outside [-1, 1]");
    }
  }
  return ProductCoords{Chart::Mean, std::move(mbar)};
}

double interaction_energy(const CbmParams& p, const SpinConfig& x) {
  const int n = p.n();
  if (x.n() != n) throw std::invalid_argument("configuration size mismatch");
  for (int s : x.spins) {
    if (s != -1 && s != 1) {
      throw std::invalid_argument("spins must be -1 or +1");
    }
  }
  const auto h = p.h_raw();
  const auto w = p.w_raw();
  const auto v = p.v_raw();
  double e = 0.0;
  for (int i = 0; i < n; ++i) e += h[i] * x.spins[i];
  int r = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++r) e += w[r] * x.spins[i] * x.spins[j];
  }
  r = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k, ++r) {
        e += v[r] * x.spins[i] * x.spins[j] * x.spins[k];
      }
    }
  }
  return e;
}

std::vector<double> config_energies(const CbmParams& p) {
  const int n = p.n();
  require_enumerable(n);
  const auto h = p.h_raw();
  const auto w = p.w_raw();
  const auto v = p.v_raw();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> energies(count);
  std::vector<double> x(n);
  for (std::uint64_t b = 0; b < count; ++b) {
    for (int i = 0; i < n; ++i) {
      x[i] = ((b >> (n - 1 - i)) & 1) ? -1.0 : 1.0;
    }
    double e = 0.0;
    for (int i = 0; i < n; ++i) e += h[i] * x[i];
    int r = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++r) e += w[r] * x[i] * x[j];
    }
    r = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k, ++r) e += v[r] * x[i] * x[j] * x[k];
      }
    }
    energies[b] = e;
  }
  return energies;
}

double log_partition_classical(const CbmParams& p) {
  const std::vector<double> energies = config_energies(p);
  const double psi = log_sum_exp(energies);
  if (!std::isfinite(psi)) {
    throw NumericalError("log-partition sum overflowed");
  }
  return psi;
}

double prob(const CbmParams& p, const SpinConfig& x) {
  const double e = interaction_energy(p, x);
  const double psi = log_partition_classical(p);
  return std::exp(e - psi);
}

CbmMoments exact_moments_classical(const CbmParams& p) {
  const int n = p.n();
  const std::vector<double> energies = config_energies(p);
  const double psi = log_sum_exp(energies);
  if (!std::isfinite(psi)) throw NumericalError("log-partition sum overflowed");

  CbmMoments out;
  out.n = n;
  out.m.assign(n, 0.0);
  out.mu.assign(pair_count(n), 0.0);
  out.iota.assign(triple_count(n), 0.0);

  std::vector<double> x(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    const double pb = std::exp(energies[b] - psi);
    for (int i = 0; i < n; ++i) {
      x[i] = ((b >> (n - 1 - i)) & 1) ? -1.0 : 1.0;
    }
    for (int i = 0; i < n; ++i) out.m[i] += pb * x[i];
    int r = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++r) out.mu[r] += pb * x[i] * x[j];
    }
    r = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k, ++r) {
          out.iota[r] += pb * x[i] * x[j] * x[k];
        }
      }
    }
  }

  for (const auto* vec : {&out.m, &out.mu, &out.iota}) {
    for (double value : *vec) {
      if (!(std::abs(value) <= 1.0 + 1e-9)) {
        throw NumericalError("moment " + std::to_string(value) +
                             " escaped [-1, 1]");
      }
    }
  }
  return out;
}

double neg_entropy(const CbmParams& p) {
  const int n = p.n();
  const std::vector<double> energies = config_energies(p);
  const double psi = log_sum_exp(energies);
  if (!std::isfinite(psi)) throw NumericalError("log-partition sum overflowed");

  double direct = 0.0;
  for (double e : energies) {
    const double logp = e - psi;
    direct += std::exp(logp) * logp;
  }

  // Dual form sum v iota + sum w mu + sum h m - psi must agree.
  const CbmMoments eta = exact_moments_classical(p);
  double dual = -psi;
  for (int i = 0; i < n; ++i) dual += p.h_raw()[i] * eta.m[i];
  for (int r = 0; r < pair_count(n); ++r) dual += p.w_raw()[r] * eta.mu[r];
  for (int r = 0; r < triple_count(n); ++r) dual += p.v_raw()[r] * eta.iota[r];
  if (std::abs(direct - dual) > 1e-10) {
    throw NumericalError("negative-entropy forms disagree by " +
                         std::to_string(direct - dual));
  }
  return direct;
}

double kl_divergence(const CbmParams& q, const CbmParams& p) {
  if (q.n() != p.n()) throw std::invalid_argument("site count mismatch");
  const std::vector<double> eq = config_energies(q);
  const std::vector<double> ep = config_energies(p);
  const double psi_q = log_sum_exp(eq);
  const double psi_p = log_sum_exp(ep);
  if (!std::isfinite(psi_q) || !std::isfinite(psi_p)) {
    throw NumericalError("log-partition sum overflowed");
  }
  double kl = 0.0;
  for (std::size_t b = 0; b < eq.size(); ++b) {
    const double logq = eq[b] - psi_q;
    const double logp = ep[b] - psi_p;
    kl += std::exp(logq) * (logq - logp);
  }
  return kl;
}

ProductCoords product_to_mean(const ProductCoords& coords) {
  if (coords.chart != ProductCoords::Chart::Field) {
    throw std::invalid_argument("expected field-chart coordinates");
  }
  std::vector<double> mbar(coords.values.size());
  for (std::size_t i = 0; i < mbar.size(); ++i) {
    mbar[i] = std::tanh(coords.values[i]);
  }
  return ProductCoords{ProductCoords::Chart::Mean, std::move(mbar)};
}

ProductCoords mean_to_product(const ProductCoords& coords) {
  if (coords.chart != ProductCoords::Chart::Mean) {
    throw std::invalid_argument("expected mean-chart coordinates");
  }
  std::vector<double> hbar(coords.values.size());
  for (std::size_t i = 0; i < hbar.size(); ++i) {
    hbar[i] = clamped_atanh(coords.values[i]);
  }
  return ProductCoords{ProductCoords::Chart::Field, std::move(hbar)};
}

double product_entropy(const ProductCoords& coords) {
  if (coords.chart != ProductCoords::Chart::Mean) {
    throw std::invalid_argument("expected mean-chart coordinates");
  }
  double phi = 0.0;
  for (double m : coords.values) {
    if (!(std::abs(m) <= 1.0)) {
      throw std::domain_error("magnetization " + std::to_string(m) +
                              " outside [-1, 1]");
    }
    phi += xlogx((1.0 + m) / 2.0) + xlogx((1.0 - m) / 2.0);
  }
  return phi;
}

CbmParams product_params(const ProductCoords& coords) {
  const ProductCoords field = coords.chart == ProductCoords::Chart::Field
                                  ? coords
                                  : mean_to_product(coords);
  CbmParams p(field.n());
  for (int i = 0; i < field.n(); ++i) p.set_h(i, field.values[i]);
  return p;
}

}  // namespace qboltz
