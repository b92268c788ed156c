#include <benchmark/benchmark.h>

#include <vector>

#include <zesprit/esprit.hpp>
#include <zesprit/harness.hpp>
#include <zesprit/order.hpp>
#include <zesprit/signal.hpp>
#include <zesprit/subspace.hpp>
#include <zesprit/zoom.hpp>

namespace {

zesprit::ComplexSignal noisy_two_tone() {
  std::vector<zesprit::SinusoidParams> params{{1.0, 5000.0, 0.25},
                                              {1.0, 5120.0, 1.75}};
  const auto clean = zesprit::synth_sinusoids(params, 50000.0, 1024);
  return zesprit::add_awgn(clean, zesprit::snr_to_sigma2(12.0), 7);
}

void bm_zoom_pipeline(benchmark::State& state) {
  const auto sig = noisy_two_tone();
  const auto cfg = zesprit::make_zoom_config(50000.0, 1024, 4218.75, 32);
  const auto fir = zesprit::default_pipeline_filter(32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zesprit::zoom_pipeline(sig, cfg, &fir));
  }
}
BENCHMARK(bm_zoom_pipeline);

void bm_covariance_evd_order(benchmark::State& state) {
  const auto sig = noisy_two_tone();
  const auto cfg = zesprit::make_zoom_config(50000.0, 1024, 4218.75, 32);
  const auto fir = zesprit::default_pipeline_filter(32);
  const auto u = zesprit::zoom_pipeline(sig, cfg, &fir);
  for (auto _ : state) {
    const auto Y = zesprit::hankel(u.samples, cfg.matrix_rows);
    const auto R = zesprit::sample_covariance(
        Y, zesprit::cov_norm_factor(zesprit::CovNorm::snapshots, cfg.matrix_cols,
                                    cfg.zoom_factor, cfg.matrix_rows));
    const auto eigs = zesprit::eig_hermitian_desc(R);
    std::vector<double> lam(eigs.eigenvalues.data(),
                            eigs.eigenvalues.data() + eigs.eigenvalues.size());
    benchmark::DoNotOptimize(zesprit::estimate_order_double(lam));
  }
}
BENCHMARK(bm_covariance_evd_order);

void bm_zoom_esprit(benchmark::State& state) {
  const auto sig = noisy_two_tone();
  const auto cfg = zesprit::make_zoom_config(50000.0, 1024, 4218.75, 32);
  const auto fir = zesprit::default_pipeline_filter(32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zesprit::zoom_esprit(sig, cfg, &fir));
  }
}
BENCHMARK(bm_zoom_esprit);

void bm_sweep_trial(benchmark::State& state) {
  zesprit::ExperimentSpec spec;
  spec.zoom = zesprit::make_zoom_config(50000.0, 1024, 4218.75, 32);
  spec.true_freqs_hz = {5000.0, 5120.0};
  spec.snr_grid_db = {12.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zesprit::run_trial(spec, 0, state.iterations() % 300));
  }
}
BENCHMARK(bm_sweep_trial);

}  // namespace

BENCHMARK_MAIN();
