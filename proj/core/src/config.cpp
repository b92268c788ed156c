#include "zesprit/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "zesprit/errors.hpp"

namespace zesprit {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_num(const std::string& value, const std::string& key) {
  double out;
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(value.data(), last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw config_error("key '" + key + "': not a number: '" + value + "'");
  }
  return out;
}

template <typename T>
T parse_uint(const std::string& value, const std::string& key) {
  T out;
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(value.data(), last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw config_error("key '" + key + "': not a non-negative integer: '" + value + "'");
  }
  return out;
}

std::vector<double> parse_list(const std::string& value, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_num(trim(item), key));
  return out;
}

std::vector<std::string> split_names(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

const char* cov_norm_name(CovNorm norm) {
  switch (norm) {
    case CovNorm::snapshots: return "snapshots";
    case CovNorm::zoom: return "zoom";
    case CovNorm::rows: return "rows";
  }
  throw config_error("unknown covariance normalization");
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "sample_rate") {
    cfg.sample_rate = parse_num(value, key);
  } else if (key == "n_samples") {
    cfg.n_samples = parse_uint<std::size_t>(value, key);
  } else if (key == "band_start") {
    cfg.band_start = parse_num(value, key);
  } else if (key == "zoom_factor") {
    cfg.zoom_factor = parse_uint<std::size_t>(value, key);
  } else if (key == "matrix_rows") {
    cfg.matrix_rows = parse_uint<std::size_t>(value, key);
  } else if (key == "filter_taps") {
    cfg.filter_taps = parse_uint<std::size_t>(value, key);
  } else if (key == "true_freqs") {
    cfg.true_freqs = parse_list(value, key);
  } else if (key == "amplitudes") {
    cfg.amplitudes = parse_list(value, key);
  } else if (key == "phases") {
    cfg.phases = parse_list(value, key);
  } else if (key == "snr_db") {
    cfg.snr_db = parse_num(value, key);
  } else if (key == "snr_grid_db") {
    cfg.snr_grid_db = parse_list(value, key);
  } else if (key == "trials") {
    cfg.trials = parse_uint<std::size_t>(value, key);
  } else if (key == "base_seed") {
    cfg.base_seed = parse_uint<std::uint64_t>(value, key);
  } else if (key == "estimators") {
    cfg.estimators.clear();
    for (const std::string& name : split_names(value)) {
      cfg.estimators.push_back(estimator_from_name(name));
    }
  } else if (key == "cov_norm") {
    if (value == "snapshots") {
      cfg.cov_norm = CovNorm::snapshots;
    } else if (value == "zoom") {
      cfg.cov_norm = CovNorm::zoom;
    } else if (value == "rows") {
      cfg.cov_norm = CovNorm::rows;
    } else {
      throw config_error("cov_norm must be snapshots, zoom, or rows");
    }
  } else if (key == "num_signals") {
    cfg.num_signals = parse_uint<std::size_t>(value, key);
  } else if (key == "gate") {
    if (value == "on") {
      cfg.gate = true;
    } else if (value == "off") {
      cfg.gate = false;
    } else {
      throw config_error("gate must be on or off");
    }
  } else if (key == "gate_factor") {
    cfg.gate_factor = parse_num(value, key);
  } else if (key == "threads") {
    cfg.threads = parse_uint<std::size_t>(value, key);
  } else {
    throw config_error("unknown config key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);

  RunConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw config_error(path + ":" + std::to_string(line_no) + ": empty key");
    }
    apply_setting(cfg, key, value);
  }
  return cfg;
}

std::size_t effective_filter_taps(const RunConfig& cfg) {
  if (cfg.filter_taps) return *cfg.filter_taps;
  return cfg.zoom_factor >= 2 ? 57 : 0;
}

ZoomConfig zoom_of(const RunConfig& cfg) {
  return make_zoom_config(cfg.sample_rate, cfg.n_samples, cfg.band_start,
                          cfg.zoom_factor, cfg.matrix_rows);
}

ExperimentSpec experiment_of(const RunConfig& cfg) {
  ExperimentSpec spec;
  spec.zoom = zoom_of(cfg);
  spec.true_freqs_hz = cfg.true_freqs;
  spec.amplitudes = cfg.amplitudes;
  spec.snr_grid_db = cfg.snr_grid_db;
  spec.trials = cfg.trials;
  spec.base_seed = cfg.base_seed;
  spec.estimators = cfg.estimators;
  spec.filter_taps = effective_filter_taps(cfg);
  spec.cov_norm = cfg.cov_norm;
  validate_spec(spec);
  return spec;
}

std::string config_echo(const RunConfig& cfg) {
  const ZoomConfig zoom = zoom_of(cfg);

  std::string out;
  out += "sample_rate = " + format_double(cfg.sample_rate) + "\n";
  out += "n_samples = " + std::to_string(cfg.n_samples) + "\n";
  out += "band_start = " + format_double(cfg.band_start) + "\n";
  out += "zoom_factor = " + std::to_string(cfg.zoom_factor) + "\n";
  out += "matrix_rows = " + std::to_string(zoom.matrix_rows) + "\n";
  out += "filter_taps = " + std::to_string(effective_filter_taps(cfg)) + "\n";
  out += "true_freqs = " + join(cfg.true_freqs) + "\n";
  if (!cfg.amplitudes.empty()) out += "amplitudes = " + join(cfg.amplitudes) + "\n";
  if (!cfg.phases.empty()) out += "phases = " + join(cfg.phases) + "\n";
  if (cfg.snr_db) out += "snr_db = " + format_double(*cfg.snr_db) + "\n";
  out += "snr_grid_db = " + join(cfg.snr_grid_db) + "\n";
  out += "trials = " + std::to_string(cfg.trials) + "\n";
  out += "base_seed = " + std::to_string(cfg.base_seed) + "\n";
  out += "estimators = ";
  for (std::size_t i = 0; i < cfg.estimators.size(); ++i) {
    if (i) out += ',';
    out += estimator_name(cfg.estimators[i]);
  }
  out += "\n";
  out += "cov_norm = " + std::string(cov_norm_name(cfg.cov_norm)) + "\n";
  out += "num_signals = " + std::to_string(cfg.num_signals) + "\n";
  out += "gate = " + std::string(cfg.gate ? "on" : "off") + "\n";
  out += "gate_factor = " + format_double(cfg.gate_factor) + "\n";
  out += "threads = " + std::to_string(cfg.threads) + "\n";
  out += "# derived: band_width = " + format_double(zoom.band_width_hz) + "\n";
  out += "# derived: shift_freq = " + format_double(zoom.shift_freq_hz) + "\n";
  out += "# derived: decimated_count = " + std::to_string(zoom.decimated_count) + "\n";
  out += "# derived: matrix_cols = " + std::to_string(zoom.matrix_cols) + "\n";
  return out;
}

}  // namespace zesprit
