#include "zesprit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "zesprit/errors.hpp"
#include "zesprit/order.hpp"
#include "zesprit/rng.hpp"

namespace zesprit {

const char* estimator_name(Estimator e) {
  switch (e) {
    case Estimator::double_criterion: return "double";
    case Estimator::aic: return "aic";
    case Estimator::mdl: return "mdl";
  }
  throw config_error("unknown estimator");
}

Estimator estimator_from_name(const std::string& name) {
  if (name == "double") return Estimator::double_criterion;
  if (name == "aic") return Estimator::aic;
  if (name == "mdl") return Estimator::mdl;
  throw config_error("unknown estimator '" + name + "' (expected double, aic, mdl)");
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw config_error("trials must be >= 1");
  if (spec.true_freqs_hz.empty()) throw config_error("true_freqs must be nonempty");
  if (spec.snr_grid_db.empty()) throw config_error("snr_grid_db must be nonempty");
  if (spec.estimators.empty()) throw config_error("estimators must be nonempty");

  const double lo = spec.zoom.band_start_hz;
  const double hi = lo + spec.zoom.band_width_hz;
  for (double f : spec.true_freqs_hz) {
    if (!(f > lo && f < hi)) {
      throw config_error("true frequency " + format_double(f) +
                         " outside the open zoom band (" + format_double(lo) + ", " +
                         format_double(hi) + ")");
    }
  }

  if (!spec.amplitudes.empty()) {
    if (spec.amplitudes.size() != spec.true_freqs_hz.size()) {
      throw config_error("amplitudes and true_freqs lengths differ");
    }
    for (double a : spec.amplitudes) {
      if (!(a > 0.0)) throw config_error("amplitudes must be positive");
    }
  }

  for (Estimator e : spec.estimators) {
    if (e == Estimator::double_criterion &&
        spec.true_freqs_hz.size() > spec.zoom.matrix_rows / 2 - 2) {
      throw config_error("signal count exceeds the double criterion's search range");
    }
  }

  if (spec.filter_taps == 0) {
    if (spec.zoom.zoom_factor > 1) {
      throw config_error("filtering cannot be skipped when zoom_factor > 1");
    }
  } else {
    if (spec.zoom.zoom_factor < 2) {
      throw config_error("filter cutoff undefined at zoom_factor 1; set filter_taps = 0");
    }
    if (spec.filter_taps % 2 == 0 || spec.filter_taps < 3) {
      throw config_error("filter_taps must be odd and >= 3");
    }
  }
}

namespace {

std::vector<SinusoidParams> trial_sinusoids(const ExperimentSpec& spec,
                                            const std::vector<double>& phases) {
  std::vector<SinusoidParams> params(spec.true_freqs_hz.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i].amplitude = spec.amplitudes.empty() ? 1.0 : spec.amplitudes[i];
    params[i].frequency_hz = spec.true_freqs_hz[i];
    params[i].phase_rad = phases[i];
  }
  return params;
}

std::vector<double> spectrum_of(const ComplexSignal& band, const ExperimentSpec& spec) {
  const Eigen::MatrixXcd Y = hankel(band.samples, spec.zoom.matrix_rows);
  const double factor = cov_norm_factor(spec.cov_norm, spec.zoom.matrix_cols,
                                        spec.zoom.zoom_factor, spec.zoom.matrix_rows);
  const EigenSpectrum es = eig_hermitian_desc(sample_covariance(Y, factor));
  return {es.eigenvalues.data(), es.eigenvalues.data() + es.eigenvalues.size()};
}

}  // namespace

TrialResult run_trial(const ExperimentSpec& spec, std::size_t snr_index,
                      std::size_t trial_index) {
  if (snr_index >= spec.snr_grid_db.size()) throw config_error("snr_index out of range");
  if (trial_index >= spec.trials) throw config_error("trial_index out of range");

  SplitMix64 rng(trial_seed(spec.base_seed, snr_index, trial_index));
  const std::vector<double> phases = draw_phases(rng, spec.true_freqs_hz.size());

  ComplexSignal y = synth_sinusoids(trial_sinusoids(spec, phases),
                                    spec.zoom.sample_rate_hz, spec.zoom.n_samples);

  const double sigma2 = snr_to_sigma2(spec.snr_grid_db[snr_index]);
  if (sigma2 > 0.0) {
    const double scale = std::sqrt(sigma2 / 2.0);
    for (cplx& s : y.samples) {
      double z0, z1;
      rng.normal_pair(z0, z1);
      s += cplx(scale * z0, scale * z1);
    }
  }

  FirFilter fir;
  if (spec.filter_taps > 0) {
    fir = design_lowpass(1.0 / static_cast<double>(spec.zoom.zoom_factor),
                         spec.filter_taps);
  }
  const ComplexSignal band =
      zoom_pipeline(y, spec.zoom, spec.filter_taps > 0 ? &fir : nullptr);
  const std::vector<double> eigs = spectrum_of(band, spec);

  TrialResult out;
  out.k_hat.reserve(spec.estimators.size());
  for (Estimator e : spec.estimators) {
    switch (e) {
      case Estimator::double_criterion:
        out.k_hat.push_back(estimate_order_double(eigs).K_hat);
        break;
      case Estimator::aic:
        out.k_hat.push_back(estimate_order_aic(eigs, spec.zoom.matrix_cols));
        break;
      case Estimator::mdl:
        out.k_hat.push_back(estimate_order_mdl(eigs, spec.zoom.matrix_cols));
        break;
    }
  }
  return out;
}

SweepResult sweep(const ExperimentSpec& spec, std::size_t threads) {
  validate_spec(spec);

  const std::size_t n_snr = spec.snr_grid_db.size();
  const std::size_t total = n_snr * spec.trials;
  std::vector<TrialResult> slots(total);

  if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  threads = std::min(threads, total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      const std::size_t snr_index = i / spec.trials;
      const std::size_t trial_index = i % spec.trials;
      try {
        slots[i] = run_trial(spec, snr_index, trial_index);
      } catch (const numerical_error&) {
        slots[i].failed = true;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SweepResult result;
  result.base_seed = spec.base_seed;
  result.rows.reserve(n_snr * spec.estimators.size());
  const std::size_t k_true = spec.true_freqs_hz.size();

  for (std::size_t s = 0; s < n_snr; ++s) {
    std::size_t failed = 0;
    std::vector<std::size_t> correct(spec.estimators.size(), 0);
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const TrialResult& tr = slots[s * spec.trials + t];
      if (tr.failed) {
        ++failed;
        continue;
      }
      for (std::size_t e = 0; e < spec.estimators.size(); ++e) {
        if (tr.k_hat[e] == k_true) ++correct[e];
      }
    }
    const std::size_t completed = spec.trials - failed;
    for (std::size_t e = 0; e < spec.estimators.size(); ++e) {
      SweepRow row;
      row.snr_db = spec.snr_grid_db[s];
      row.estimator = spec.estimators[e];
      row.trials = completed;
      row.correct_count = correct[e];
      row.failed_count = failed;
      row.p_ce = completed == 0
                     ? 0.0
                     : static_cast<double>(correct[e]) / static_cast<double>(completed);
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "snr_db,estimator,p_ce,trials,correct_count,failed_count\n";
  for (const SweepRow& row : result.rows) {
    out += format_double(row.snr_db);
    out += ',';
    out += estimator_name(row.estimator);
    out += ',';
    out += format_double(row.p_ce);
    out += ',';
    out += std::to_string(row.trials);
    out += ',';
    out += std::to_string(row.correct_count);
    out += ',';
    out += std::to_string(row.failed_count);
    out += '\n';
  }
  return out;
}

}  // namespace zesprit
