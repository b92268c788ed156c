#include "zesprit/esprit.hpp"

#include <algorithm>
#include <cmath>

#include "zesprit/errors.hpp"

namespace zesprit {

Eigen::MatrixXcd signal_subspace(const EigenSpectrum& spectrum, std::size_t k) {
  const auto cols = static_cast<std::size_t>(spectrum.eigenvectors.cols());
  if (k < 1 || k >= cols) throw config_error("subspace dimension must lie in [1, rows)");
  return spectrum.eigenvectors.leftCols(static_cast<Eigen::Index>(k));
}

Eigen::MatrixXcd rotation_operator(const Eigen::MatrixXcd& subspace) {
  const Eigen::Index m = subspace.rows();
  const Eigen::Index k = subspace.cols();
  if (m < 2) throw config_error("subspace needs at least 2 rows");
  if (k >= m) throw numerical_error("no row overlap left for a rank-" +
                                    std::to_string(k) + " rotation");

  const Eigen::MatrixXcd upper = subspace.topRows(m - 1);
  const Eigen::MatrixXcd lower = subspace.bottomRows(m - 1);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(upper,
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(k - 1);
  if (smin <= 0.0 || smax / smin > 1e12) {
    throw numerical_error("rotation overlap block is rank deficient");
  }
  return svd.solve(lower);
}

std::vector<double> frequencies_from_rotation(const Eigen::MatrixXcd& rotation,
                                              double sample_rate_hz) {
  if (rotation.rows() != rotation.cols() || rotation.rows() < 1) {
    throw config_error("rotation operator must be square and nonempty");
  }
  if (!(sample_rate_hz > 0.0)) throw config_error("sample rate must be positive");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(rotation, false);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("rotation eigendecomposition failed");
  }

  std::vector<double> freqs(static_cast<std::size_t>(rotation.rows()));
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    const cplx v = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    freqs[i] = std::arg(v) / (2.0 * M_PI) * sample_rate_hz;
  }
  std::sort(freqs.begin(), freqs.end());
  return freqs;
}

std::vector<double> shift_back(const std::vector<double>& baseband_hz,
                               double shift_freq_hz) {
  std::vector<double> out(baseband_hz.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = baseband_hz[i] + shift_freq_hz;
  return out;
}

ZoomEspritResult zoom_esprit(const ComplexSignal& signal, const ZoomConfig& cfg,
                             const FirFilter* fir, std::size_t num_signals,
                             CovNorm norm) {
  const ComplexSignal band = zoom_pipeline(signal, cfg, fir);

  const Eigen::MatrixXcd Y = hankel(band.samples, cfg.matrix_rows);
  const double factor =
      cov_norm_factor(norm, cfg.matrix_cols, cfg.zoom_factor, cfg.matrix_rows);
  const Eigen::MatrixXcd R = sample_covariance(Y, factor);

  ZoomEspritResult out;
  out.spectrum = eig_hermitian_desc(R);

  std::vector<double> eigs(out.spectrum.eigenvalues.data(),
                           out.spectrum.eigenvalues.data() + out.spectrum.eigenvalues.size());
  out.order = estimate_order_double(eigs);
  out.num_signals = (num_signals > 0) ? num_signals : out.order.K_hat;
  if (out.spectrum.eigenvalues(0) == 0.0) {
    out.degenerate = true;
    return out;
  }
  if (out.num_signals >= cfg.matrix_rows - 1) {
    throw numerical_error("estimated order " + std::to_string(out.num_signals) +
                          " leaves no noise subspace");
  }

  const Eigen::MatrixXcd sub = signal_subspace(out.spectrum, out.num_signals);
  const Eigen::MatrixXcd phi = rotation_operator(sub);
  const std::vector<double> baseband = frequencies_from_rotation(phi, band.sample_rate_hz);
  out.freqs_hz = shift_back(baseband, cfg.shift_freq_hz);
  return out;
}

}  // namespace zesprit
