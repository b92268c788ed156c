#include "zesprit/signal.hpp"

#include <cmath>
#include <numbers>

#include "zesprit/errors.hpp"
#include "zesprit/rng.hpp"

namespace zesprit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(j*2*pi*q*n) evaluated with the fractional part of q*n so the sin/cos
// argument stays small; q*n itself is exact enough up to ~2^53.
cplx unit_phasor(double q, double n) {
  const double qn = q * n;
  const double frac = qn - std::floor(qn);
  const double a = kTwoPi * frac;
  return {std::cos(a), std::sin(a)};
}
}  // namespace

ComplexSignal synth_sinusoids(const std::vector<SinusoidParams>& params,
                              double sample_rate_hz, std::size_t n_samples) {
  if (n_samples == 0) throw data_error("synth_sinusoids: n_samples must be >= 1");
  if (sample_rate_hz <= 0) throw config_error("synth_sinusoids: sample rate must be > 0");
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].amplitude <= 0)
      throw config_error("synth_sinusoids: amplitudes must be > 0");
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i].frequency_hz == params[j].frequency_hz)
        throw config_error("synth_sinusoids: frequencies must be distinct");
  }

  ComplexSignal out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.assign(n_samples, cplx{0.0, 0.0});
  for (const auto& p : params) {
    const double q = p.frequency_hz / sample_rate_hz;
    const cplx rot = std::polar(p.amplitude, p.phase_rad);
    for (std::size_t n = 0; n < n_samples; ++n)
      out.samples[n] += rot * unit_phasor(q, static_cast<double>(n));
  }
  return out;
}

double snr_to_sigma2(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

ComplexSignal add_awgn(const ComplexSignal& signal, double sigma2, std::uint64_t seed) {
  if (sigma2 < 0) throw config_error("add_awgn: sigma2 must be >= 0");
  ComplexSignal out = signal;
  if (sigma2 == 0) return out;
  SplitMix64 rng(seed);
  const double scale = std::sqrt(sigma2 / 2.0);
  for (auto& s : out.samples) {
    double z0, z1;
    rng.normal_pair(z0, z1);
    s += cplx{scale * z0, scale * z1};
  }
  return out;
}

std::vector<double> draw_phases(SplitMix64& rng, std::size_t count) {
  std::vector<double> phases(count);
  for (auto& p : phases) p = kTwoPi * rng.uniform();
  return phases;
}

}  // namespace zesprit
