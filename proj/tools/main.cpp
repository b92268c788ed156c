#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zesprit/config.hpp"
#include "zesprit/errors.hpp"
#include "zesprit/esprit.hpp"
#include "zesprit/io.hpp"

namespace {

using namespace zesprit;

// Naive DFT magnitudes; the gate runs on short decimated sequences, so an FFT
// would be wasted machinery here.
std::vector<double> dft_magnitudes(const std::vector<cplx>& u) {
  const std::size_t n = u.size();
  std::vector<double> mags(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = -2.0 * M_PI * static_cast<double>(k * i % n) / static_cast<double>(n);
      acc += u[i] * cplx(std::cos(t), std::sin(t));
    }
    mags[k] = std::abs(acc);
  }
  return mags;
}

bool presence_gate(const std::vector<cplx>& band, double factor) {
  if (band.empty()) return false;
  std::vector<double> mags = dft_magnitudes(band);
  const double peak = *std::max_element(mags.begin(), mags.end());
  std::sort(mags.begin(), mags.end());
  const std::size_t n = mags.size();
  const double median =
      n % 2 ? mags[n / 2] : 0.5 * (mags[n / 2 - 1] + mags[n / 2]);
  if (median == 0.0) return peak > 0.0;
  return peak > factor * median;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::argmax_is_one: return "argmax_is_one";
    case Branch::noise_a: return "a";
    case Branch::signal_b: return "b";
  }
  return "?";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot open for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw data_error("write failed: " + path);
}

FirFilter make_filter(const RunConfig& cfg, bool& use) {
  const std::size_t taps = effective_filter_taps(cfg);
  use = taps > 0;
  if (!use) return {};
  if (cfg.zoom_factor < 2) {
    throw config_error("filter cutoff undefined at zoom_factor 1; set filter_taps = 0");
  }
  return design_lowpass(1.0 / static_cast<double>(cfg.zoom_factor), taps);
}

int cmd_gen(const RunConfig& cfg, const std::string& out_path) {
  if (out_path.empty()) throw config_error("gen requires --out");
  std::cout << config_echo(cfg);

  // Same stream position as sweep trial (snr_index 0, trial 0), so a generated
  // file is exactly that trial's signal when snr_db matches the grid point.
  SplitMix64 rng(trial_seed(cfg.base_seed, 0, 0));
  std::vector<double> phases = cfg.phases;
  if (phases.empty()) {
    phases = draw_phases(rng, cfg.true_freqs.size());
  } else if (phases.size() != cfg.true_freqs.size()) {
    throw config_error("phases and true_freqs lengths differ");
  }

  if (!cfg.amplitudes.empty() && cfg.amplitudes.size() != cfg.true_freqs.size()) {
    throw config_error("amplitudes and true_freqs lengths differ");
  }
  std::vector<SinusoidParams> params(cfg.true_freqs.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i].amplitude = cfg.amplitudes.empty() ? 1.0 : cfg.amplitudes[i];
    params[i].frequency_hz = cfg.true_freqs[i];
    params[i].phase_rad = phases[i];
  }

  ComplexSignal y = synth_sinusoids(params, cfg.sample_rate, cfg.n_samples);
  if (cfg.snr_db) {
    const double sigma2 = snr_to_sigma2(*cfg.snr_db);
    const double scale = std::sqrt(sigma2 / 2.0);
    for (cplx& s : y.samples) {
      double z0, z1;
      rng.normal_pair(z0, z1);
      s += cplx(scale * z0, scale * z1);
    }
  }

  write_signal(out_path, y.samples);
  std::cout << "# wrote " << y.samples.size() << " samples to " << out_path << "\n";
  return 0;
}

int cmd_estimate(const RunConfig& cfg, const std::string& in_path,
                 const std::string& out_path) {
  std::cout << config_echo(cfg);

  const std::vector<cplx> samples = read_signal(in_path);
  if (samples.size() < cfg.zoom_factor * 6) {
    throw data_error("signal file too short: " + std::to_string(samples.size()) +
                     " samples, need at least " + std::to_string(cfg.zoom_factor * 6));
  }

  const ZoomConfig zoom = make_zoom_config(cfg.sample_rate, samples.size(),
                                           cfg.band_start, cfg.zoom_factor,
                                           cfg.matrix_rows);
  ComplexSignal y{samples, cfg.sample_rate};

  bool use_filter = false;
  const FirFilter fir = make_filter(cfg, use_filter);
  const FirFilter* fir_ptr = use_filter ? &fir : nullptr;

  std::string csv = "field,index,value\n";
  if (cfg.gate) {
    const ComplexSignal band = zoom_pipeline(y, zoom, fir_ptr);
    if (!presence_gate(band.samples, cfg.gate_factor)) {
      std::cout << "status = no-signal\n";
      csv += "status,,no-signal\n";
      if (!out_path.empty()) write_text(out_path, csv);
      return 0;
    }
  }

  const ZoomEspritResult res =
      zoom_esprit(y, zoom, fir_ptr, cfg.num_signals, cfg.cov_norm);

  // K_hat is the count the frequency stage used: the double-criterion answer,
  // or num_signals when the order was fixed. Criterion diagnostics follow.
  std::cout << "K_hat = " << res.num_signals << "\n";
  std::cout << "k_hat = " << res.order.k_hat << "\n";
  std::cout << "branch = " << branch_name(res.order.branch) << "\n";
  std::cout << "d_A = " << join(res.order.profile.first) << "\n";
  std::cout << "d_AA = " << join(res.order.profile.second) << "\n";
  csv += "K_hat,," + std::to_string(res.num_signals) + "\n";
  csv += "k_hat,," + std::to_string(res.order.k_hat) + "\n";
  csv += std::string("branch,,") + branch_name(res.order.branch) + "\n";
  for (std::size_t i = 0; i < res.order.profile.first.size(); ++i) {
    csv += "d_A," + std::to_string(i) + "," + format_double(res.order.profile.first[i]) + "\n";
  }
  for (std::size_t i = 0; i < res.order.profile.second.size(); ++i) {
    csv += "d_AA," + std::to_string(i) + "," + format_double(res.order.profile.second[i]) + "\n";
  }
  if (res.degenerate) {
    std::cout << "status = degenerate\n";
    csv += "status,,degenerate\n";
  } else {
    std::cout << "freqs_hz = " << join(res.freqs_hz) << "\n";
    for (std::size_t i = 0; i < res.freqs_hz.size(); ++i) {
      csv += "freq_hz," + std::to_string(i) + "," + format_double(res.freqs_hz[i]) + "\n";
    }
  }
  if (!out_path.empty()) write_text(out_path, csv);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& out_path) {
  std::cout << config_echo(cfg);
  const ExperimentSpec spec = experiment_of(cfg);
  const SweepResult result = sweep(spec, cfg.threads);
  const std::string csv = sweep_to_csv(result);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text(out_path, csv);
    std::cout << "# wrote " << result.rows.size() << " rows to " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zoom ESPRIT frequency estimation and order-selection experiments"};
  app.require_subcommand(1);

  std::string config_path, out_path, gate_value, input_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials, zoom_factor;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "configuration file (key = value lines)");
    cmd->add_option("--seed", seed, "override base_seed");
    cmd->add_option("--trials", trials, "override trials");
    cmd->add_option("--zoom-factor", zoom_factor, "override zoom_factor");
    cmd->add_option("--out", out_path, "output path");
    cmd->add_option("--gate", gate_value, "signal presence gate")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--set", overrides, "override any config key as key=value");
  };

  CLI::App* gen = app.add_subcommand("gen", "synthesize a signal file");
  CLI::App* estimate = app.add_subcommand("estimate", "estimate order and frequencies");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo p_ce versus SNR");
  add_common(gen);
  add_common(estimate);
  add_common(sweep_cmd);
  estimate->add_option("input", input_path, "signal file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = zesprit::parse_config_file(config_path);
    for (const std::string& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw zesprit::config_error("--set expects key=value, got '" + kv + "'");
      }
      zesprit::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (seed) cfg.base_seed = *seed;
    if (trials) cfg.trials = *trials;
    if (zoom_factor) cfg.zoom_factor = *zoom_factor;
    if (!gate_value.empty()) zesprit::apply_setting(cfg, "gate", gate_value);

    if (gen->parsed()) return cmd_gen(cfg, out_path);
    if (estimate->parsed()) return cmd_estimate(cfg, input_path, out_path);
    return cmd_sweep(cfg, out_path);
  } catch (const zesprit::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const zesprit::data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const zesprit::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  }
}
