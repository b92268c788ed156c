#pragma once

#include <cstddef>
#include <vector>

#include "zesprit/order.hpp"
#include "zesprit/signal.hpp"
#include "zesprit/subspace.hpp"
#include "zesprit/zoom.hpp"

namespace zesprit {

// Rotational-invariance frequency estimation on the decimated band.

Eigen::MatrixXcd signal_subspace(const EigenSpectrum& spectrum, std::size_t k);

// Least-squares rotation between the subspace with its last and first rows
// dropped. Throws numerical_error when the overlap block is too ill
// conditioned to invert meaningfully.
Eigen::MatrixXcd rotation_operator(const Eigen::MatrixXcd& subspace);

// Frequencies in Hz at the given sample rate, sorted ascending. The rotation
// eigenvalue arguments live in (-pi, pi], so the band is +/- rate/2.
std::vector<double> frequencies_from_rotation(const Eigen::MatrixXcd& rotation,
                                              double sample_rate_hz);

std::vector<double> shift_back(const std::vector<double>& baseband_hz,
                               double shift_freq_hz);

struct ZoomEspritResult {
  EigenSpectrum spectrum;
  OrderDecision order;
  std::size_t num_signals = 0;
  std::vector<double> freqs_hz;  // absolute Hz, ascending
  bool degenerate = false;       // spectrum carried no energy; freqs_hz empty
};

// Full chain: zoom pipeline, Hankel covariance, EVD, order selection, ESPRIT,
// shift back to absolute frequency. num_signals = 0 lets the double criterion
// pick the order; a fixed positive count skips it (order is still reported).
// An all-zero spectrum has no signal subspace to rotate: the result then
// carries the order diagnostics (K_hat is still >= 1 by the order module's
// contract) and an empty frequency list. Presence gating is the caller's job.
ZoomEspritResult zoom_esprit(const ComplexSignal& signal, const ZoomConfig& cfg,
                             const FirFilter* fir, std::size_t num_signals = 0,
                             CovNorm norm = CovNorm::snapshots);

}  // namespace zesprit
