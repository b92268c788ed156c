#include "zesprit/zoom.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zesprit/errors.hpp"

namespace zesprit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}
}  // namespace

ZoomConfig make_zoom_config(double sample_rate_hz, std::size_t n_samples,
                            double band_start_hz, std::size_t zoom_factor,
                            std::size_t matrix_rows) {
  if (sample_rate_hz <= 0) throw config_error("zoom: sample rate must be > 0");
  if (zoom_factor < 1) throw config_error("zoom: zoom factor must be >= 1");
  if (n_samples < 1) throw config_error("zoom: n_samples must be >= 1");

  ZoomConfig c;
  c.sample_rate_hz = sample_rate_hz;
  c.n_samples = n_samples;
  c.band_start_hz = band_start_hz;
  c.zoom_factor = zoom_factor;
  c.band_width_hz = sample_rate_hz / static_cast<double>(zoom_factor);
  c.shift_freq_hz = band_start_hz + 0.5 * c.band_width_hz;
  c.decimated_count = n_samples / zoom_factor;
  c.matrix_rows = matrix_rows == 0 ? c.decimated_count / 2 : matrix_rows;
  if (c.matrix_rows < 6)
    throw config_error("zoom: matrix_rows = " + std::to_string(c.matrix_rows) +
                       ", need >= 6 for a nonempty criterion search range "
                       "(increase n_samples or decrease zoom_factor)");
  if (c.matrix_rows > c.decimated_count)
    throw config_error("zoom: matrix_rows exceeds the decimated length");
  c.matrix_cols = c.decimated_count - c.matrix_rows + 1;
  return c;
}

FirFilter design_lowpass(double normalized_cutoff, std::size_t n_taps) {
  if (!(normalized_cutoff > 0.0 && normalized_cutoff < 1.0))
    throw config_error("design_lowpass: cutoff must lie in (0, 1)");
  if (n_taps < 3 || n_taps % 2 == 0)
    throw config_error("design_lowpass: tap count must be odd and >= 3");

  FirFilter f;
  f.taps.resize(n_taps);
  f.group_delay = (n_taps - 1) / 2;
  const double center = static_cast<double>(n_taps - 1) / 2.0;
  double sum = 0.0;
  for (std::size_t m = 0; m < n_taps; ++m) {
    const double w =
        0.54 - 0.46 * std::cos(kTwoPi * static_cast<double>(m) / static_cast<double>(n_taps - 1));
    const double v = w * sinc(normalized_cutoff * (static_cast<double>(m) - center));
    f.taps[m] = v;
    sum += v;
  }
  for (auto& t : f.taps) t /= sum;
  return f;
}

FirFilter default_pipeline_filter(std::size_t zoom_factor) {
  if (zoom_factor < 2) throw config_error("default_pipeline_filter: zoom factor must be >= 2");
  return design_lowpass(1.0 / static_cast<double>(zoom_factor), 57);
}

ComplexSignal freq_shift(const ComplexSignal& signal, double shift_freq_hz) {
  if (signal.samples.empty()) throw data_error("freq_shift: empty signal");
  ComplexSignal out = signal;
  const double q = shift_freq_hz / signal.sample_rate_hz;
  for (std::size_t n = 0; n < out.samples.size(); ++n) {
    const double qn = q * static_cast<double>(n);
    const double a = -kTwoPi * (qn - std::floor(qn));
    out.samples[n] *= cplx{std::cos(a), std::sin(a)};
  }
  return out;
}

ComplexSignal filter(const ComplexSignal& signal, const FirFilter& fir) {
  const std::size_t n = signal.samples.size();
  const std::size_t t = fir.taps.size();
  if (n < t) throw data_error("filter: signal shorter than the filter");
  ComplexSignal out;
  out.sample_rate_hz = signal.sample_rate_hz;
  out.samples.assign(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    const std::size_t mmax = std::min(i + 1, t);
    for (std::size_t m = 0; m < mmax; ++m) acc += fir.taps[m] * signal.samples[i - m];
    out.samples[i] = acc;
  }
  return out;
}

ComplexSignal decimate(const ComplexSignal& signal, std::size_t zoom_factor) {
  if (zoom_factor < 1) throw config_error("decimate: zoom factor must be >= 1");
  ComplexSignal out;
  out.sample_rate_hz = signal.sample_rate_hz / static_cast<double>(zoom_factor);
  const std::size_t n_out = signal.samples.size() / zoom_factor;
  out.samples.resize(n_out);
  for (std::size_t m = 0; m < n_out; ++m) out.samples[m] = signal.samples[m * zoom_factor];
  return out;
}

ComplexSignal zoom_pipeline(const ComplexSignal& signal, const ZoomConfig& config,
                            const FirFilter* fir) {
  if (signal.samples.size() != config.n_samples)
    throw data_error("zoom_pipeline: signal length does not match the configuration");
  ComplexSignal stage = freq_shift(signal, config.shift_freq_hz);
  if (fir != nullptr) stage = filter(stage, *fir);
  return decimate(stage, config.zoom_factor);
}

}  // namespace zesprit
