#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zesprit/harness.hpp"

namespace zesprit {

// Plain-text run configuration: one `key = value` per line, `#` starts a
// comment, unknown keys are rejected. Command-line overrides go through the
// same assignment path as file lines.
struct RunConfig {
  double sample_rate = 50000.0;
  std::size_t n_samples = 1024;
  double band_start = 4218.75;
  std::size_t zoom_factor = 32;
  std::size_t matrix_rows = 0;                // 0 = floor(N_A / 2)
  std::optional<std::size_t> filter_taps;     // unset = 57, or 0 at zoom 1
  std::vector<double> true_freqs{5000.0, 5120.0};
  std::vector<double> amplitudes;             // empty = all 1
  std::vector<double> phases;                 // empty = drawn from base_seed
  std::optional<double> snr_db;               // gen only; unset = noiseless
  std::vector<double> snr_grid_db{-12, -9, -6, -3, 0, 3, 6, 9, 12, 15, 18, 21, 24};
  std::size_t trials = 300;
  std::uint64_t base_seed = 42;
  std::vector<Estimator> estimators{Estimator::double_criterion, Estimator::aic,
                                    Estimator::mdl};
  CovNorm cov_norm = CovNorm::snapshots;
  std::size_t num_signals = 0;                // estimate: 0 = automatic order
  bool gate = false;
  double gate_factor = 6.0;
  std::size_t threads = 0;                    // 0 = hardware concurrency
};

RunConfig parse_config_file(const std::string& path);

// Single assignment used for both file lines and --set overrides.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

std::size_t effective_filter_taps(const RunConfig& cfg);

ZoomConfig zoom_of(const RunConfig& cfg);

ExperimentSpec experiment_of(const RunConfig& cfg);

// Effective configuration plus every derived zoom quantity, one `key = value`
// per line, itself parseable as a config file.
std::string config_echo(const RunConfig& cfg);

}  // namespace zesprit
