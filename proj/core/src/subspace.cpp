#include "zesprit/subspace.hpp"

#include <Eigen/Eigenvalues>

#include "zesprit/errors.hpp"

namespace zesprit {

Eigen::MatrixXcd hankel(const std::vector<cplx>& u, std::size_t rows) {
  if (rows < 1 || rows > u.size())
    throw data_error("hankel: row count must lie in [1, sequence length]");
  const std::size_t cols = u.size() - rows + 1;
  Eigen::MatrixXcd Y(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) Y(i, j) = u[i + j];
  return Y;
}

Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& Y, double norm) {
  if (Y.size() == 0) throw data_error("sample_covariance: empty data matrix");
  if (norm <= 0) throw config_error("sample_covariance: norm must be > 0");
  return norm * (Y * Y.adjoint());
}

double cov_norm_factor(CovNorm norm, std::size_t matrix_cols, std::size_t zoom_factor,
                       std::size_t matrix_rows) {
  switch (norm) {
    case CovNorm::snapshots:
      return 1.0 / static_cast<double>(matrix_cols);
    case CovNorm::zoom:
      return 1.0 / static_cast<double>(zoom_factor);
    case CovNorm::rows:
      return 1.0 / static_cast<double>(matrix_rows);
  }
  throw config_error("cov_norm_factor: unknown normalization");
}

EigenSpectrum eig_hermitian_desc(const Eigen::MatrixXcd& R) {
  if (R.rows() != R.cols()) throw data_error("eig_hermitian_desc: matrix must be square");
  const Eigen::MatrixXcd H = 0.5 * (R + R.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  if (solver.info() != Eigen::Success)
    throw numerical_error("eig_hermitian_desc: eigensolver did not converge");

  const Eigen::Index m = H.rows();
  EigenSpectrum s;
  s.eigenvalues.resize(m);
  s.eigenvectors.resize(m, m);
  const double lmax = solver.eigenvalues().maxCoeff();
  const double clamp_tol = 1e-10 * std::max(lmax, 0.0);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index src = m - 1 - k;  // ascending -> descending
    double lam = solver.eigenvalues()(src);
    if (lam < 0.0 && lam >= -clamp_tol) lam = 0.0;
    s.eigenvalues(k) = lam;
    s.eigenvectors.col(k) = solver.eigenvectors().col(src);
  }
  return s;
}

}  // namespace zesprit
