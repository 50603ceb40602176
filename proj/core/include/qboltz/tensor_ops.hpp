#pragma once

// Dense Hermitian kernel on (C^2)^{(x) n}: Pauli matrices, site-embedded
// operators, matrix exponential/logarithm by eigendecomposition, traces.
//
// Sites are 0-based in the C++ API; Pauli labels s are 1, 2, 3. All
// operations are pure functions of immutable inputs and safe to call
// concurrently.

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>

#include <Eigen/Dense>

namespace qboltz {

using Complex = std::complex<double>;

// Dense 2^n x 2^n matrices; desk-scale memory caps the register size.
inline constexpr int kMaxQuantumSites = 10;

// Hermiticity defects below this are symmetrized away as floating-point
// drift; larger defects are rejected.
inline constexpr double kHermitianTol = 1e-10;

// The 2x2 Pauli matrix sigma_s. Invalid labels raise std::domain_error.
Eigen::Matrix2cd pauli(int s);

// sigma_s acting on `site` of an n-site register, identity elsewhere.
Eigen::MatrixXcd site_operator(int n, int site, int s);

// Product of Pauli factors at strictly increasing sites. Each factor is a
// (site, label) pair; the empty product is the identity. Such strings have
// exactly one nonzero per column, so assembly is O(2^n).
Eigen::MatrixXcd pauli_string(int n, std::span<const std::pair<int, int>> factors);
Eigen::MatrixXcd pauli_string(int n, std::initializer_list<std::pair<int, int>> factors);

// op += coeff * (Pauli string); the workhorse behind Hamiltonian assembly.
void add_pauli_term(Eigen::MatrixXcd& op, int n,
                    std::span<const std::pair<int, int>> factors, double coeff);

// max |A - A*| entrywise.
double hermiticity_defect(const Eigen::MatrixXcd& a);

struct HermitianEigen {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns match values
};

// Eigendecomposition of (a + a*)/2; rejects defects above kHermitianTol.
HermitianEigen herm_eig(const Eigen::MatrixXcd& a);

// exp(a) for Hermitian a; Hermitian positive definite by construction.
Eigen::MatrixXcd herm_expm(const Eigen::MatrixXcd& a);

// log(p) for Hermitian positive definite p. A non-positive eigenvalue is a
// domain error naming the offender.
Eigen::MatrixXcd herm_logm(const Eigen::MatrixXcd& p);

// Re Tr[a b] for Hermitian a, b. The imaginary residue must stay below
// 1e-10; larger residues raise NumericalError.
double trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qboltz
