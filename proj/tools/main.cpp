// Copyright 2026 The wptdock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wptdock CLI: sweep / compare / calibrate / align.
//
// Exit codes: 0 success, 2 input or config error, 3 solver non-convergence,
// 4 calibration infeasible. Data goes to --out (or stdout); diagnostics go
// to stderr only.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wptdock/align.hpp"
#include "wptdock/config.hpp"
#include "wptdock/errors.hpp"
#include "wptdock/json_io.hpp"
#include "wptdock/model.hpp"
#include "wptdock/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitCalibration = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wptdock::ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw wptdock::ConfigError("cannot open output file: " + out_path);
  out << data;
}

wptdock::ExperimentConfig load_config(const std::string& path) {
  wptdock::ExperimentConfig cfg = wptdock::parse_config(read_file(path));
  return cfg;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path) {
  wptdock::ExperimentConfig cfg = load_config(config_path);
  wptdock::ValidationReport report = wptdock::validate(cfg.network);
  if (!report.empty()) {
    throw wptdock::ConfigError("network: " + wptdock::format_report(report));
  }
  wptdock::SweepResult result = wptdock::run_sweep(cfg.network, cfg.sweep);
  write_output(out_path, wptdock::to_csv(result));
  return kExitOk;
}

int cmd_compare(const std::string& config_path, const std::string& out_path) {
  wptdock::ExperimentConfig cfg = load_config(config_path);
  std::vector<wptdock::ReceiverNetwork> networks;
  std::vector<wptdock::SweepConfig> configs;
  for (wptdock::TopologyKind kind : cfg.compare_topologies) {
    wptdock::ReceiverNetwork net = cfg.network;
    net.topology = kind;
    networks.push_back(net);
    configs.push_back(wptdock::default_sweep_config(kind));
  }
  wptdock::ComparisonReport report =
      wptdock::compare_topologies(networks, configs);
  if (cfg.has_battery) {
    for (wptdock::TopologySummary& s : report.topologies) {
      s.charge_time_h =
          wptdock::estimate_charge_time(cfg.battery, s.peak_p_out);
    }
  }
  write_output(out_path, wptdock::to_json(report));
  return kExitOk;
}

int cmd_calibrate(const std::string& config_path, const std::string& out_path) {
  wptdock::ExperimentConfig cfg = load_config(config_path);
  wptdock::CalibrationOptions options;
  options.n_modules = static_cast<int>(cfg.network.modules.size());
  options.r_bus = cfg.network.r_bus;
  try {
    wptdock::ModuleSpec calibrated =
        wptdock::calibrate(cfg.calibration, cfg.module, options);
    write_output(out_path, wptdock::to_json(calibrated));
  } catch (const wptdock::CalibrationInfeasible& e) {
    nlohmann::json best{{"error", "calibration_infeasible"},
                        {"message", e.what()},
                        {"best",
                         {{"r_droop", e.best_r_droop()},
                          {"eta_link", e.best_eta_link()},
                          {"p_out_peak_w", e.best_p_out_peak()},
                          {"eta_at_peak", e.best_eta_at_peak()}}}};
    write_output(out_path, best.dump(2) + "\n");
    std::cerr << "error: " << e.what() << "\n";
    return kExitCalibration;
  }
  return kExitOk;
}

int cmd_align(const std::string& config_path, const std::string& out_path) {
  wptdock::ExperimentConfig cfg = load_config(config_path);
  wptdock::ValidationReport report = wptdock::validate(cfg.frustum);
  if (!report.empty()) {
    throw wptdock::ConfigError("frustum: " + wptdock::format_report(report));
  }
  wptdock::AlignReport align =
      wptdock::align_check(cfg.frustum, cfg.align_dx_mm, cfg.align_dy_mm,
                           cfg.align_yaw_deg, cfg.module.gap_max);
  write_output(out_path, wptdock::to_json(align));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wptdock: wireless drone docking station simulator"};
  app.require_subcommand(1);

  struct SubArgs {
    std::string config;
    std::string out;
  };
  SubArgs sweep_args, compare_args, calibrate_args, align_args;

  auto add_sub = [&](const char* name, const char* desc, SubArgs& args) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", args.config, "experiment config (JSON)")
        ->required();
    sub->add_option("--out", args.out, "output file (default: stdout)");
    return sub;
  };
  CLI::App* sweep =
      add_sub("sweep", "run a load sweep, emit CSV", sweep_args);
  CLI::App* compare =
      add_sub("compare", "sweep per topology, emit a JSON comparison report",
              compare_args);
  CLI::App* calibrate = add_sub(
      "calibrate", "fit r_droop/eta_link to the measured peak, emit the "
                   "calibrated module JSON",
      calibrate_args);
  CLI::App* align =
      add_sub("align", "frustum self-locking and coil-gap check, emit JSON",
              align_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors are input errors; --help/--version stay successful.
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(sweep_args.config, sweep_args.out);
    if (compare->parsed()) {
      return cmd_compare(compare_args.config, compare_args.out);
    }
    if (calibrate->parsed()) {
      return cmd_calibrate(calibrate_args.config, calibrate_args.out);
    }
    if (align->parsed()) return cmd_align(align_args.config, align_args.out);
  } catch (const wptdock::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const wptdock::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const wptdock::Error& e) {
    // Invalid networks, degenerate inputs and the like are input errors.
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
