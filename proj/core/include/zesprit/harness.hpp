#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zesprit/subspace.hpp"
#include "zesprit/zoom.hpp"

namespace zesprit {

enum class Estimator { double_criterion, aic, mdl };

const char* estimator_name(Estimator e);
Estimator estimator_from_name(const std::string& name);

// One Monte Carlo experiment: probability of correct order estimation versus
// SNR for the requested estimators, all evaluated on the same per-trial
// eigenvalue spectrum.
struct ExperimentSpec {
  ZoomConfig zoom;
  std::vector<double> true_freqs_hz;
  std::vector<double> amplitudes;  // empty = all 1
  std::vector<double> snr_grid_db;
  std::size_t trials = 300;
  std::uint64_t base_seed = 42;
  std::vector<Estimator> estimators{Estimator::double_criterion, Estimator::aic,
                                    Estimator::mdl};
  std::size_t filter_taps = 57;  // 0 = no filter stage (required at zoom 1)
  CovNorm cov_norm = CovNorm::snapshots;
};

void validate_spec(const ExperimentSpec& spec);

struct TrialResult {
  std::vector<std::size_t> k_hat;  // aligned with spec.estimators
  bool failed = false;
};

// Deterministic in (spec, snr_index, trial_index): the trial seed positions a
// fresh generator that first draws the phases, then the noise samples.
// Synthesizes, runs the zoom pipeline and one eigendecomposition, then applies
// every requested estimator to the eigenvalue spectrum.
TrialResult run_trial(const ExperimentSpec& spec, std::size_t snr_index,
                      std::size_t trial_index);

struct SweepRow {
  double snr_db = 0.0;
  Estimator estimator = Estimator::double_criterion;
  double p_ce = 0.0;           // correct_count / trials (0 when trials == 0)
  std::size_t trials = 0;      // completed trials; failed ones are excluded
  std::size_t correct_count = 0;
  std::size_t failed_count = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // grid order, estimators in spec order
  std::uint64_t base_seed = 0;
};

// threads = 0 picks the hardware concurrency. Trials are stored in
// preassigned slots and aggregated after the join, so the result is
// independent of scheduling. A trial that fails numerically is counted in
// failed_count and excluded from the p_ce denominator, never dropped silently.
SweepResult sweep(const ExperimentSpec& spec, std::size_t threads = 0);

// Shortest decimal form that round-trips the exact binary64 value.
std::string format_double(double value);

std::string sweep_to_csv(const SweepResult& result);

}  // namespace zesprit
