#pragma once

#include <cstddef>
#include <vector>

#include "zesprit/signal.hpp"

namespace zesprit {

// Geometry of one zoom analysis: the band [band_start, band_start + band_width]
// is shifted to baseband, low-pass filtered, and decimated by zoom_factor.
// Derived quantities follow from (sample_rate, n_samples, band_start, zoom_factor)
// plus an optional explicit row count for the data matrix.
struct ZoomConfig {
  double sample_rate_hz = 50000.0;  // F_s
  std::size_t n_samples = 1024;     // N
  double band_start_hz = 4218.75;   // f_1
  std::size_t zoom_factor = 32;     // A

  double band_width_hz = 0.0;       // F_p = F_s / A
  double shift_freq_hz = 0.0;       // f_shift = f_1 + F_p / 2
  std::size_t decimated_count = 0;  // N_A = floor(N / A)
  std::size_t matrix_rows = 0;      // M_A, default floor(N_A / 2)
  std::size_t matrix_cols = 0;      // L_A = N_A - M_A + 1
};

// Fills the derived fields and validates the result. matrix_rows == 0 selects
// the default M_A = floor(N_A / 2); the estimator downstream needs M_A >= 6.
ZoomConfig make_zoom_config(double sample_rate_hz, std::size_t n_samples,
                            double band_start_hz, std::size_t zoom_factor,
                            std::size_t matrix_rows = 0);

// Linear-phase FIR low-pass: Hamming-windowed sinc with unity DC gain.
struct FirFilter {
  std::vector<double> taps;
  std::size_t group_delay = 0;  // (taps.size() - 1) / 2
};

// normalized_cutoff is a fraction of the Nyquist frequency, in (0, 1).
// n_taps must be odd so the filter is symmetric about an integer delay.
FirFilter design_lowpass(double normalized_cutoff, std::size_t n_taps);

// The default analysis filter for a given zoom factor: cutoff at the decimated
// Nyquist (1/A of the input Nyquist), 57 taps. The length is deliberately short:
// it keeps the filter warm-up confined to the first decimated sample, which the
// sweep experiments depend on (see tests), while still overlapping lag A enough
// to color the decimated noise floor.
FirFilter default_pipeline_filter(std::size_t zoom_factor);

// out[n] = in[n] * exp(-j 2 pi n shift_freq / F_s); length and rate unchanged.
ComplexSignal freq_shift(const ComplexSignal& signal, double shift_freq_hz);

// Causal convolution truncated to the input length. The leading transient is
// kept: the decimated warm-up samples deviate from steady state in proportion
// to the signal and act as the rank-boundary marker the order estimator keys
// on; trimming them collapses the estimator at high SNR.
ComplexSignal filter(const ComplexSignal& signal, const FirFilter& fir);

// out[m] = in[m * A], m = 0 .. floor(N/A)-1; output rate F_s / A.
ComplexSignal decimate(const ComplexSignal& signal, std::size_t zoom_factor);

// shift -> filter -> decimate. Pass fir = nullptr to skip the filter stage
// (degenerate configurations such as zoom_factor = 1).
ComplexSignal zoom_pipeline(const ComplexSignal& signal, const ZoomConfig& config,
                            const FirFilter* fir);

}  // namespace zesprit
