#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zesprit/signal.hpp"

namespace zesprit {

// How the sample covariance is normalized. Every downstream consumer
// (criterion ratios, subspaces) is scale invariant, so this cannot change an
// order estimate or a frequency; it is configurable and tested as such.
enum class CovNorm { snapshots, zoom, rows };

struct EigenSpectrum {
  Eigen::VectorXd eigenvalues;    // non-increasing, tiny negatives clamped to 0
  Eigen::MatrixXcd eigenvectors;  // column k pairs with eigenvalues[k]
};

// Hankel data matrix: entries(i, j) = u[i + j], rows x (P - rows + 1).
Eigen::MatrixXcd hankel(const std::vector<cplx>& u, std::size_t rows);

// R = norm * Y * Y^H.
Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& Y, double norm);

double cov_norm_factor(CovNorm norm, std::size_t matrix_cols, std::size_t zoom_factor,
                       std::size_t matrix_rows);

// Hermitian eigendecomposition, eigenvalues sorted non-increasing.
// The input is symmetrized as (R + R^H)/2 first. Negative eigenvalues within
// 1e-10 * lambda_max of zero are roundoff from a PSD source and are clamped.
EigenSpectrum eig_hermitian_desc(const Eigen::MatrixXcd& R);

}  // namespace zesprit
