#include "qboltz/tensor_ops.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qboltz/errors.hpp"

namespace qboltz {

namespace {

void check_register(int n) {
  if (n < 1) throw std::invalid_argument("site count must be positive");
  if (n > kMaxQuantumSites) {
    throw std::domain_error("site count " + std::to_string(n) +
                            " exceeds the quantum cap of " +
                            std::to_string(kMaxQuantumSites));
  }
}

std::string fmt_value(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace

Eigen::Matrix2cd pauli(int s) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (s) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -i, i, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::domain_error("Pauli label must be 1, 2 or 3, got " +
                              std::to_string(s));
  }
  return m;
}

void add_pauli_term(Eigen::MatrixXcd& op, int n,
                    std::span<const std::pair<int, int>> factors, double coeff) {
  check_register(n);
  const std::int64_t dim = std::int64_t{1} << n;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument("operator dimension does not match site count");
  }
  int prev = -1;
  for (const auto& [site, s] : factors) {
    if (site < 0 || site >= n) {
      throw std::invalid_argument("site " + std::to_string(site) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (site <= prev) {
      throw std::invalid_argument("Pauli string sites must be strictly increasing");
    }
    if (s < 1 || s > 3) {
      throw std::domain_error("Pauli label must be 1, 2 or 3, got " +
                              std::to_string(s));
    }
    prev = site;
  }

  // Site 0 is the leftmost tensor factor, i.e. the most significant bit of
  // the basis index; bit 0 is the sigma_3 eigenvalue +1.
  const Complex imag{0.0, 1.0};
  for (std::int64_t col = 0; col < dim; ++col) {
    std::int64_t row = col;
    Complex amp = coeff;
    for (const auto& [site, s] : factors) {
      const int shift = n - 1 - site;
      const std::int64_t bit = (col >> shift) & 1;
      switch (s) {
        case 1:
          row ^= std::int64_t{1} << shift;
          break;
        case 2:
          row ^= std::int64_t{1} << shift;
          amp *= (bit == 0) ? imag : -imag;
          break;
        default:
          if (bit) amp = -amp;
          break;
      }
    }
    op(row, col) += amp;
  }
}

Eigen::MatrixXcd pauli_string(int n, std::span<const std::pair<int, int>> factors) {
  check_register(n);
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  add_pauli_term(op, n, factors, 1.0);
  return op;
}

Eigen::MatrixXcd pauli_string(int n, std::initializer_list<std::pair<int, int>> factors) {
  return pauli_string(n, std::span<const std::pair<int, int>>(factors.begin(), factors.size()));
}

Eigen::MatrixXcd site_operator(int n, int site, int s) {
  const std::pair<int, int> factor{site, s};
  return pauli_string(n, std::span<const std::pair<int, int>>(&factor, 1));
}

double hermiticity_defect(const Eigen::MatrixXcd& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen herm_eig(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianTol) {
    throw std::invalid_argument("matrix is not Hermitian (defect " +
                                fmt_value(defect) + ")");
  }
  const Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXcd herm_expm(const Eigen::MatrixXcd& a) {
  const HermitianEigen eig = herm_eig(a);
  const Eigen::VectorXd exped = eig.values.array().exp();
  const Eigen::MatrixXcd r = eig.vectors * exped.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

Eigen::MatrixXcd herm_logm(const Eigen::MatrixXcd& p) {
  const HermitianEigen eig = herm_eig(p);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (!(eig.values[k] > 1e-300)) {
      throw std::domain_error("matrix log needs positive eigenvalues; found " +
                              fmt_value(eig.values[k]));
    }
  }
  const Eigen::VectorXd logged = eig.values.array().log();
  const Eigen::MatrixXcd r = eig.vectors * logged.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

double trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("trace_product needs square matrices of equal dimension");
  }
  // Tr[AB] = sum_{a,b} A(a,b) B(b,a) without forming the product.
  const Complex tr = a.transpose().cwiseProduct(b).sum();
  if (std::abs(tr.imag()) > 1e-10) {
    throw NumericalError("trace of Hermitian product has imaginary residue " +
                         fmt_value(tr.imag()));
  }
  return tr.real();
}

}  // namespace qboltz
