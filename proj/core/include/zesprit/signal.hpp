#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zesprit/rng.hpp"

namespace zesprit {

using cplx = std::complex<double>;

struct SinusoidParams {
  double amplitude = 1.0;  // > 0
  double frequency_hz = 0.0;
  double phase_rad = 0.0;  // [0, 2*pi)
};

struct ComplexSignal {
  std::vector<cplx> samples;
  double sample_rate_hz = 1.0;

  std::size_t size() const { return samples.size(); }
};

// Sum of K complex sinusoids, sample n = sum_i a_i * exp(j(2*pi*f_i*n/Fs + phi_i)).
// Frequencies must be pairwise distinct.
ComplexSignal synth_sinusoids(const std::vector<SinusoidParams>& params,
                              double sample_rate_hz, std::size_t n_samples);

// SNR is defined against a unit-power signal: SNR = 1/sigma^2,
// so sigma^2 = 10^(-snr_db/10).
double snr_to_sigma2(double snr_db);

// Adds circularly symmetric complex Gaussian noise with total variance sigma2
// (real and imaginary parts independent, each of variance sigma2/2).
// Pure function of (signal, sigma2, seed).
ComplexSignal add_awgn(const ComplexSignal& signal, double sigma2, std::uint64_t seed);

// K phases drawn uniformly on [0, 2*pi) from an already-positioned generator.
// Exposed so trial synthesis and file generation share one draw protocol.
std::vector<double> draw_phases(SplitMix64& rng, std::size_t count);

}  // namespace zesprit
