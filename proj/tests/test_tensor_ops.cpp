#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qboltz/errors.hpp"
#include "qboltz/tensor_ops.hpp"
#include "test_util.hpp"

using namespace qboltz;

TEST_CASE("pauli matrices match their defining entries") {
  const Eigen::Matrix2cd s1 = pauli(1);
  CHECK(s1(0, 0) == Complex{0, 0});
  CHECK(s1(0, 1) == Complex{1, 0});
  CHECK(s1(1, 0) == Complex{1, 0});
  CHECK(s1(1, 1) == Complex{0, 0});

  const Eigen::Matrix2cd s2 = pauli(2);
  CHECK(s2(0, 1) == Complex{0, -1});
  CHECK(s2(1, 0) == Complex{0, 1});

  const Eigen::Matrix2cd s3 = pauli(3);
  CHECK(s3(0, 0) == Complex{1, 0});
  CHECK(s3(1, 1) == Complex{-1, 0});

  // involution
  CHECK(((s2 * s2) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pauli rejects invalid labels") {
  CHECK_THROWS_AS(pauli(0), std::domain_error);
  CHECK_THROWS_AS(pauli(4), std::domain_error);
}

TEST_CASE("pauli trace orthogonality: Tr[sigma_s sigma_t] = 2 delta_st") {
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; t <= 3; ++t) {
      const double expected = (s == t) ? 2.0 : 0.0;
      CHECK(trace_product(pauli(s), pauli(t)) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("site_operator embeds at the right slot") {
  // n=1: no embedding
  CHECK((site_operator(1, 0, 3) - pauli(3)).cwiseAbs().maxCoeff() == 0.0);

  // n=2, second site: I (x) sigma_1, traceless
  const Eigen::MatrixXcd op = site_operator(2, 1, 1);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected.block<2, 2>(0, 0) = pauli(1);
  expected.block<2, 2>(2, 2) = pauli(1);
  CHECK((op - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(op.trace()) == 0.0);

  // squares to the identity
  const Eigen::MatrixXcd sq = site_operator(3, 1, 2) * site_operator(3, 1, 2);
  CHECK((sq - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("site_operator rejects bad arguments") {
  CHECK_THROWS_AS(site_operator(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(site_operator(2, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(site_operator(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(site_operator(kMaxQuantumSites + 1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(site_operator(2, 0, 5), std::domain_error);
}

TEST_CASE("operators at distinct sites commute") {
  const int n = 3;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
          const Eigen::MatrixXcd a = site_operator(n, i, s);
          const Eigen::MatrixXcd b = site_operator(n, j, t);
          CHECK((a * b - b * a).cwiseAbs().maxCoeff() <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("pauli_string multiplies embedded factors") {
  const Eigen::MatrixXcd direct =
      site_operator(3, 0, 2) * site_operator(3, 2, 1);
  const Eigen::MatrixXcd string = pauli_string(3, {{0, 2}, {2, 1}});
  CHECK((direct - string).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(hermiticity_defect(string) <= 1e-14);
}

TEST_CASE("herm_expm on trivial inputs") {
  CHECK((herm_expm(Eigen::MatrixXcd::Zero(4, 4)) -
         Eigen::MatrixXcd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  const double a = 0.7;
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = a;
  diag(1, 1) = -a;
  const Eigen::MatrixXcd e = herm_expm(diag);
  CHECK(std::abs(e(0, 0).real() - std::exp(a)) <= 1e-14);
  CHECK(std::abs(e(1, 1).real() - std::exp(-a)) <= 1e-14);
  CHECK(std::abs(e(0, 1)) <= 1e-15);
}

TEST_CASE("herm_expm maps the spectrum through exp") {
  const Eigen::MatrixXcd a = testutil::random_hermitian(8, 11);
  const HermitianEigen in = herm_eig(a);
  const HermitianEigen out = herm_eig(herm_expm(a));
  for (int k = 0; k < 8; ++k) {
    const double expected = std::exp(in.values[k]);
    CHECK(std::abs(out.values[k] - expected) <= 1e-10 * std::abs(expected));
  }
}

TEST_CASE("herm_logm inverts herm_expm on random Hermitian matrices") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Eigen::MatrixXcd a = testutil::random_hermitian(8, seed);
    const Eigen::MatrixXcd back = herm_logm(herm_expm(a));
    CHECK((back - a).cwiseAbs().maxCoeff() <= 1e-9);
  }
  // Wider spectra round-trip within 1e-8 while the spread stays conditioned:
  // the error grows like d * eps * exp(spread), so |lambda| up to ~7 is the
  // limit for that bound in doubles.
  const Eigen::MatrixXcd wide = testutil::random_hermitian(6, 17, 2.0);
  CHECK(herm_eig(wide).values.cwiseAbs().maxCoeff() <= 20.0);
  CHECK((herm_logm(herm_expm(wide)) - wide).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("herm_logm on trivial inputs") {
  CHECK(herm_logm(Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <=
        1e-14);
  const Eigen::MatrixXcd half = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd l = herm_logm(half);
  CHECK(std::abs(l(0, 0).real() + std::log(2.0)) <= 1e-14);
  CHECK(std::abs(l(1, 1).real() + std::log(2.0)) <= 1e-14);
}

TEST_CASE("herm_logm rejects non-positive matrices") {
  Eigen::MatrixXcd indef = Eigen::MatrixXcd::Identity(2, 2);
  indef(1, 1) = -0.5;
  CHECK_THROWS_AS(herm_logm(indef), std::domain_error);
  CHECK_THROWS_AS(herm_logm(Eigen::MatrixXcd::Zero(2, 2)), std::domain_error);
}

TEST_CASE("non-Hermitian inputs are rejected, small defects symmetrized") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(herm_expm(bad), std::invalid_argument);

  Eigen::MatrixXcd drift = testutil::random_hermitian(4, 5);
  drift(0, 1) += Complex{1e-12, 0};
  CHECK_NOTHROW(herm_expm(drift));
}

TEST_CASE("trace_product basics") {
  CHECK(trace_product(Eigen::MatrixXcd::Identity(4, 4),
                      Eigen::MatrixXcd::Identity(4, 4)) ==
        doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(trace_product(pauli(3), pauli(1))) <= 1e-15);
  CHECK(trace_product(pauli(2), pauli(2)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(
      trace_product(Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(4, 4)),
      std::invalid_argument);
}
