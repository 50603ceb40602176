#pragma once

// Deterministic fixtures and finite-difference helpers shared by the suites.

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "qboltz/cbm.hpp"
#include "qboltz/qbm.hpp"
#include "qboltz/random.hpp"

namespace qboltz::testutil {

inline Eigen::MatrixXcd random_hermitian(int dim, std::uint64_t seed,
                                         double scale = 1.0) {
  GaussianStream gauss(seed);
  Eigen::MatrixXcd a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      a(r, c) = Complex{gauss.next(), gauss.next()};
    }
  }
  return scale * 0.5 * (a + a.adjoint()).eval();
}

inline CbmParams random_cbm(int n, std::uint64_t seed, double sh, double sw,
                            double sv) {
  GaussianStream gauss(seed);
  CbmParams p(n);
  for (int i = 0; i < n; ++i) p.set_h(i, sh * gauss.next());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) p.set_w(i, j, sw * gauss.next());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) p.set_v(i, j, k, sv * gauss.next());
    }
  }
  return p;
}

inline QbmParams random_qbm(int n, std::uint64_t seed, double sh, double sw,
                            double sv) {
  GaussianStream gauss(seed);
  QbmParams p(n);
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) p.set_h(i, s, sh * gauss.next());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) p.set_w(i, j, s, t, sw * gauss.next());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int s = 1; s <= 3; ++s) {
          for (int t = 1; t <= 3; ++t) {
            for (int u = 1; u <= 3; ++u) {
              p.set_v(i, j, k, s, t, u, sv * gauss.next());
            }
          }
        }
      }
    }
  }
  return p;
}

// Classical model embedded on the sigma_3 axis: a diagonal quantum model.
inline QbmParams embed_diagonal(const CbmParams& p) {
  const int n = p.n();
  QbmParams q(n);
  for (int i = 0; i < n; ++i) q.set_h(i, 3, p.h(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.w(i, j) != 0.0) q.set_w(i, j, 3, 3, p.w(i, j));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (p.v(i, j, k) != 0.0) q.set_v(i, j, k, 3, 3, 3, p.v(i, j, k));
      }
    }
  }
  return q;
}

// Central finite difference of f at x.
template <typename F>
double central_diff(F&& f, double x, double step = 1e-5) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace qboltz::testutil
