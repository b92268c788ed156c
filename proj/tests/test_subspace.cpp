#include <complex>

#include "doctest.h"
#include "zesprit/errors.hpp"
#include "zesprit/rng.hpp"
#include "zesprit/subspace.hpp"

using namespace zesprit;

TEST_CASE("hankel matrix structure") {
  std::vector<cplx> u;
  for (int i = 0; i < 8; ++i) u.emplace_back(i, 0.0);

  const Eigen::MatrixXcd Y = hankel(u, 3);
  REQUIRE(Y.rows() == 3);
  REQUIRE(Y.cols() == 6);
  for (Eigen::Index i = 0; i < Y.rows(); ++i) {
    for (Eigen::Index j = 0; j < Y.cols(); ++j) {
      CHECK(Y(i, j).real() == static_cast<double>(i + j));
    }
  }
  // constant anti-diagonals
  for (Eigen::Index i = 1; i < Y.rows(); ++i) {
    for (Eigen::Index j = 0; j + 1 < Y.cols(); ++j) {
      CHECK(Y(i, j) == Y(i - 1, j + 1));
    }
  }

  CHECK_THROWS_AS(hankel(u, 0), data_error);
  CHECK_THROWS_AS(hankel(u, 9), data_error);
  CHECK(hankel(u, 8).cols() == 1);
}

TEST_CASE("sample covariance is a normalized outer product") {
  Eigen::MatrixXcd Y(2, 2);
  Y << cplx(1, 0), cplx(0, 1), cplx(2, 0), cplx(0, 0);

  const Eigen::MatrixXcd R = sample_covariance(Y, 0.5);
  CHECK(R(0, 0) == cplx(1.0, 0.0));
  CHECK(R(0, 1) == cplx(1.0, 0.0));
  CHECK(R(1, 0) == cplx(1.0, 0.0));
  CHECK(R(1, 1) == cplx(2.0, 0.0));

  CHECK_THROWS_AS(sample_covariance(Y, 0.0), config_error);
  CHECK_THROWS_AS(sample_covariance(Eigen::MatrixXcd(), 1.0), data_error);
}

TEST_CASE("covariance normalization factors") {
  CHECK(cov_norm_factor(CovNorm::snapshots, 17, 32, 16) == doctest::Approx(1.0 / 17));
  CHECK(cov_norm_factor(CovNorm::zoom, 17, 32, 16) == doctest::Approx(1.0 / 32));
  CHECK(cov_norm_factor(CovNorm::rows, 17, 32, 16) == doctest::Approx(1.0 / 16));
}

TEST_CASE("hermitian eigendecomposition sorts descending") {
  Eigen::MatrixXcd H(2, 2);
  H << cplx(2, 0), cplx(0, 1), cplx(0, -1), cplx(2, 0);

  const EigenSpectrum es = eig_hermitian_desc(H);
  CHECK(es.eigenvalues(0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(es.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(eig_hermitian_desc(Eigen::MatrixXcd::Zero(2, 3)), data_error);
}

TEST_CASE("tiny negative roundoff eigenvalues clamp to zero") {
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(3, 3);
  H(0, 0) = 1.0;
  H(1, 1) = -1e-18;
  H(2, 2) = 0.0;

  const EigenSpectrum es = eig_hermitian_desc(H);
  CHECK(es.eigenvalues(0) == 1.0);
  CHECK(es.eigenvalues(1) == 0.0);
  CHECK(es.eigenvalues(2) == 0.0);

  // genuine negatives are not masked
  Eigen::MatrixXcd Hneg = Eigen::MatrixXcd::Zero(2, 2);
  Hneg(0, 0) = 1.0;
  Hneg(1, 1) = -3.0;
  CHECK(eig_hermitian_desc(Hneg).eigenvalues(1) == doctest::Approx(-3.0));
}

TEST_CASE("eigendecomposition reconstructs the matrix") {
  SplitMix64 g(5);
  Eigen::MatrixXcd B(16, 24);
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      B(i, j) = cplx(g.uniform() - 0.5, g.uniform() - 0.5);
    }
  }
  const Eigen::MatrixXcd R = sample_covariance(B, 1.0 / 24.0);
  const EigenSpectrum es = eig_hermitian_desc(R);

  const Eigen::MatrixXcd recon = es.eigenvectors *
                                 es.eigenvalues.asDiagonal() *
                                 es.eigenvectors.adjoint();
  CHECK((recon - R).norm() / R.norm() <= 1e-8);

  const Eigen::MatrixXcd gram = es.eigenvectors.adjoint() * es.eigenvectors;
  CHECK((gram - Eigen::MatrixXcd::Identity(16, 16)).norm() < 1e-12);

  for (Eigen::Index i = 0; i + 1 < es.eigenvalues.size(); ++i) {
    CHECK(es.eigenvalues(i) >= es.eigenvalues(i + 1));
  }
  CHECK(es.eigenvalues(es.eigenvalues.size() - 1) >= 0.0);
}
