#include <cmath>
#include <complex>

#include "doctest.h"
#include "zesprit/errors.hpp"
#include "zesprit/zoom.hpp"

using namespace zesprit;

namespace {

// |H(f)| of an FIR at a fraction of Nyquist.
double gain_at(const FirFilter& f, double nyquist_fraction) {
  const double om = M_PI * nyquist_fraction;
  cplx acc = 0.0;
  for (std::size_t m = 0; m < f.taps.size(); ++m) {
    acc += f.taps[m] * cplx(std::cos(om * static_cast<double>(m)),
                            -std::sin(om * static_cast<double>(m)));
  }
  return std::abs(acc);
}

}  // namespace

TEST_CASE("zoom config derives the analysis geometry") {
  const ZoomConfig c = make_zoom_config(50000.0, 1024, 4218.75, 32);
  CHECK(c.band_width_hz == 1562.5);
  CHECK(c.shift_freq_hz == 5000.0);
  CHECK(c.decimated_count == 32);
  CHECK(c.matrix_rows == 16);
  CHECK(c.matrix_cols == 17);

  const ZoomConfig explicit_rows = make_zoom_config(50000.0, 1024, 4218.75, 32, 10);
  CHECK(explicit_rows.matrix_rows == 10);
  CHECK(explicit_rows.matrix_cols == 23);
}

TEST_CASE("zoom config accepts no-zoom analysis") {
  const ZoomConfig c = make_zoom_config(50000.0, 1024, -20000.0, 1, 16);
  CHECK(c.band_width_hz == 50000.0);
  CHECK(c.shift_freq_hz == 5000.0);
  CHECK(c.decimated_count == 1024);
  CHECK(c.matrix_cols == 1009);
}

TEST_CASE("zoom config rejects unusable geometry") {
  CHECK_THROWS_AS(make_zoom_config(0.0, 1024, 0.0, 32), config_error);
  CHECK_THROWS_AS(make_zoom_config(50000.0, 0, 0.0, 32), config_error);
  CHECK_THROWS_AS(make_zoom_config(50000.0, 1024, 0.0, 0), config_error);
  CHECK_THROWS_AS(make_zoom_config(50000.0, 1024, 0.0, 32, 5), config_error);
  CHECK_THROWS_AS(make_zoom_config(50000.0, 1024, 0.0, 32, 33), config_error);
  CHECK_THROWS_AS(make_zoom_config(50000.0, 256, 0.0, 32), config_error);
}

TEST_CASE("lowpass design is symmetric with unity DC gain") {
  const FirFilter f = design_lowpass(1.0 / 32.0, 57);
  REQUIRE(f.taps.size() == 57);
  CHECK(f.group_delay == 28);

  double sum = 0.0;
  for (double t : f.taps) sum += t;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < f.taps.size(); ++i) {
    CHECK(f.taps[i] == doctest::Approx(f.taps[f.taps.size() - 1 - i]).epsilon(1e-13));
  }
}

// Tap values recomputed independently from the Hamming-windowed sinc formula.
TEST_CASE("lowpass taps are pinned") {
  const FirFilter f = design_lowpass(1.0 / 32.0, 57);
  CHECK(f.taps[0] == doctest::Approx(0.00044598119807860151).epsilon(1e-13));
  CHECK(f.taps[14] == doctest::Approx(0.015430663376431807).epsilon(1e-13));
  CHECK(f.taps[28] == doctest::Approx(0.040044680044214465).epsilon(1e-13));

  double sumsq = 0.0;
  for (double t : f.taps) sumsq += t * t;
  CHECK(sumsq == doctest::Approx(0.029073435890778494).epsilon(1e-12));

  CHECK(gain_at(f, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gain_at(f, 1.0 / 32.0) == doctest::Approx(0.6404161354).epsilon(1e-9));
  CHECK(gain_at(f, 2.0 / 32.0) == doctest::Approx(0.1421558683).epsilon(1e-9));
}

// The decimated noise floor stays correlated at lag A: the overlap of the
// default taps one zoom stride apart is what the colored-noise premise and
// the acceptance sweep rest on.
TEST_CASE("default filter overlaps lag 32") {
  const FirFilter f = default_pipeline_filter(32);
  REQUIRE(f.taps.size() == 57);
  double lag = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i + 32 < f.taps.size(); ++i) lag += f.taps[i] * f.taps[i + 32];
  for (double t : f.taps) sumsq += t * t;
  CHECK(lag / sumsq == doctest::Approx(0.059158612848639207).epsilon(1e-12));
  CHECK_THROWS_AS(default_pipeline_filter(1), config_error);
}

TEST_CASE("long designs reach the stopband spec") {
  const FirFilter f = design_lowpass(1.0 / 32.0, 129);
  CHECK(gain_at(f, 1.5 / 32.0) == doctest::Approx(0.0787736).epsilon(1e-5));
  CHECK(gain_at(f, 1.5 / 32.0) < 0.1);
  CHECK(gain_at(f, 2.0 / 32.0) < 0.01);
}

TEST_CASE("lowpass design rejects bad parameters") {
  CHECK_THROWS_AS(design_lowpass(0.0, 57), config_error);
  CHECK_THROWS_AS(design_lowpass(1.0, 57), config_error);
  CHECK_THROWS_AS(design_lowpass(0.5, 56), config_error);
  CHECK_THROWS_AS(design_lowpass(0.5, 1), config_error);
}

TEST_CASE("frequency shift preserves magnitudes") {
  ComplexSignal s;
  s.sample_rate_hz = 50000.0;
  SplitMix64 g(11);
  for (int i = 0; i < 256; ++i) s.samples.emplace_back(g.uniform() - 0.5, g.uniform() - 0.5);

  const ComplexSignal same = freq_shift(s, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(same.samples[i] == s.samples[i]);

  const ComplexSignal moved = freq_shift(s, 4218.75);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(std::abs(moved.samples[i]) ==
          doctest::Approx(std::abs(s.samples[i])).epsilon(1e-14));
  }

  ComplexSignal empty;
  CHECK_THROWS_AS(freq_shift(empty, 100.0), data_error);
}

TEST_CASE("shifting a tone to baseband makes it constant") {
  ComplexSignal s = synth_sinusoids({{1.5, 5000.0, 0.7}}, 50000.0, 200);
  const ComplexSignal base = freq_shift(s, 5000.0);
  for (const cplx& v : base.samples) {
    CHECK(v.real() == doctest::Approx(base.samples[0].real()).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(base.samples[0].imag()).epsilon(1e-12));
  }
}

TEST_CASE("causal filtering keeps length and the warm-up ramp") {
  const FirFilter f = design_lowpass(0.25, 9);

  ComplexSignal zeros;
  zeros.sample_rate_hz = 1.0;
  zeros.samples.assign(32, cplx{0.0, 0.0});
  for (const cplx& v : filter(zeros, f).samples) CHECK(v == cplx{0.0, 0.0});

  ComplexSignal delta = zeros;
  delta.samples[0] = 1.0;
  const ComplexSignal imp = filter(delta, f);
  REQUIRE(imp.size() == 32);
  for (std::size_t i = 0; i < f.taps.size(); ++i) {
    CHECK(imp.samples[i].real() == doctest::Approx(f.taps[i]).epsilon(1e-15));
  }

  ComplexSignal ones = zeros;
  for (cplx& v : ones.samples) v = 1.0;
  const ComplexSignal dc = filter(ones, f);
  CHECK(std::abs(dc.samples[0]) < 1.0);
  CHECK(dc.samples[31].real() == doctest::Approx(1.0).epsilon(1e-12));

  ComplexSignal tiny;
  tiny.sample_rate_hz = 1.0;
  tiny.samples.assign(4, cplx{0.0, 0.0});
  CHECK_THROWS_AS(filter(tiny, f), data_error);
}

TEST_CASE("decimation strides and truncates") {
  ComplexSignal s;
  s.sample_rate_hz = 3200.0;
  for (int i = 0; i < 33; ++i) s.samples.emplace_back(i, -i);

  const ComplexSignal d = decimate(s, 32);
  REQUIRE(d.size() == 1);
  CHECK(d.samples[0] == cplx{0.0, 0.0});
  CHECK(d.sample_rate_hz == 100.0);

  const ComplexSignal d4 = decimate(s, 4);
  REQUIRE(d4.size() == 8);
  for (std::size_t m = 0; m < 8; ++m) CHECK(d4.samples[m] == s.samples[4 * m]);

  const ComplexSignal d1 = decimate(s, 1);
  CHECK(d1.size() == 33);
  CHECK_THROWS_AS(decimate(s, 0), config_error);
}

// Decimated output for the reference two-tone input, pinned against an
// independent pipeline evaluation.
TEST_CASE("pipeline output is pinned for the reference tones") {
  const ZoomConfig cfg = make_zoom_config(50000.0, 1024, 4218.75, 32);
  const FirFilter f = default_pipeline_filter(32);
  ComplexSignal y = synth_sinusoids({{1.0, 5000.0, 0.25}, {1.0, 5120.0, 1.75}},
                                    50000.0, 1024);
  const ComplexSignal u = zoom_pipeline(y, cfg, &f);
  REQUIRE(u.size() == 32);
  CHECK(u.sample_rate_hz == doctest::Approx(1562.5));

  CHECK(u.samples[0].real() == doctest::Approx(0.00035262233321640697).epsilon(5e-10));
  CHECK(u.samples[0].imag() == doctest::Approx(0.00054917674563706713).epsilon(5e-10));
  CHECK(u.samples[1].real() == doctest::Approx(0.44471810069364104).epsilon(1e-12));
  CHECK(u.samples[1].imag() == doctest::Approx(0.80523860147896109).epsilon(1e-12));
  CHECK(u.samples[31].real() == doctest::Approx(0.1403511147182839).epsilon(1e-12));
  CHECK(u.samples[31].imag() == doctest::Approx(-0.29404018053151559).epsilon(1e-12));

  ComplexSignal wrong = y;
  wrong.samples.pop_back();
  CHECK_THROWS_AS(zoom_pipeline(wrong, cfg, &f), data_error);
}
