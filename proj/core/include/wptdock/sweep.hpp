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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wptdock/model.hpp"
#include "wptdock/solver.hpp"

namespace wptdock {

enum class GridSpacing { kLinear, kLogarithmic };

const char* to_string(GridSpacing spacing);
GridSpacing spacing_from_string(const std::string& name);

struct SweepConfig {
  TopologyKind topology = TopologyKind::kSeriesConnection;
  double r_min = 10.0;  // ohm
  double r_max = 100.0;
  int n_points = 100;
  GridSpacing spacing = GridSpacing::kLogarithmic;
};

// Load ranges per topology: 10-100 ohm for series, 1-10 ohm for both
// parallel variants; 100 log-spaced points (the low-resistance cliff needs
// the resolution).
SweepConfig default_sweep_config(TopologyKind topology);

// Deterministic grid, inclusive endpoints.
std::vector<double> sweep_grid(const SweepConfig& config);

struct SweepPoint {
  OperatingPoint point;
  double p_out;  // u_out * i_out
  double p_in;   // u_in * i_in
  double eta;    // p_out / p_in; 0 when p_in is 0
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepPoint> points;  // ordered by r_load ascending
};

struct Metrics {
  double p_out;
  double p_in;
  double eta;
};

// Output power, input power and transfer efficiency from the raw point
// fields. Throws DegenerateInput if p_in is 0 while p_out > 0.
Metrics compute_metrics(const OperatingPoint& point);

// One solved point per grid value. Solver failures are rethrown as
// NonConvergence with the offending r_load attached.
SweepResult run_sweep(const ReceiverNetwork& network, const SweepConfig& config,
                      const SolverConfig& solver = {});

struct MaxPowerPoint {
  std::size_t index;
  OperatingPoint point;
  double p_out;
  double eta;
};

// Point of maximal p_out; ties broken by higher eta, then lower r_load.
// Throws EmptySweep.
MaxPowerPoint max_power_point(const SweepResult& result);

struct TopologySummary {
  TopologyKind topology;
  double peak_p_out;     // W, at the max-power point
  double eta_at_peak;    // efficiency at the max-power point
  double r_load_at_peak; // ohm
  double peak_eta;       // max efficiency anywhere in the sweep
  double peak_u_out;     // max output voltage anywhere in the sweep
  double droop_ratio;    // (u(r_max) - u(r_min)) / u(r_max)
  std::optional<double> charge_time_h;  // filled by callers with a battery
};

struct ComparisonReport {
  std::vector<TopologySummary> topologies;
  // Series peak power over parallel peak power; present only when both
  // topologies were swept.
  std::optional<double> sc_pc_peak_ratio;
  std::optional<double> sc_pc_diodes_peak_ratio;
};

ComparisonReport compare_topologies(const std::vector<ReceiverNetwork>& networks,
                                    const std::vector<SweepConfig>& configs,
                                    const SolverConfig& solver = {});

struct CalibrationTarget {
  double p_out_peak = 96.5;   // W
  double eta_at_peak = 0.566; // in (0, 1)
  SweepConfig sweep = default_sweep_config(TopologyKind::kSeriesConnection);
};

struct CalibrationOptions {
  int n_modules = 3;
  double r_bus = 0.8;          // bus resistance of the calibration network
  double r_droop_min = 0.0;    // search bounds
  double r_droop_max = 5.0;
  double eta_link_min = 0.2;   // exclusive
  double p_tol_rel = 0.005;    // acceptance: |peak - target| / target
  double eta_tol_abs = 0.005;
};

// Fits (r_droop, eta_link) so the series sweep over target.sweep reproduces
// the measured peak power and the efficiency at that peak. p_idle is held at
// base.p_idle. Grid peak power is independent of eta_link and non-increasing
// in r_droop, so the 2x2 system is triangular: bisection on r_droop, then
// eta_link in closed form from the peak-point power balance, then a
// verification re-sweep. Deterministic and idempotent.
//
// Throws CalibrationInfeasible (with the best residual found) when the
// targets are unreachable within bounds.
ModuleSpec calibrate(const CalibrationTarget& target, const ModuleSpec& base,
                     const CalibrationOptions& options = {});

struct BatterySpec {
  double capacity = 0.0;          // Wh
  double charge_efficiency = 1.0; // (0, 1]
  double initial_soc = 0.0;       // [0, 1]
  double target_soc = 1.0;        // [0, 1], >= initial_soc
};

// Constant-power estimate, hours. Throws DegenerateInput for non-positive
// power or invalid battery parameters.
double estimate_charge_time(const BatterySpec& battery,
                            double delivered_power_w);

// CSV per the sweep interface: fixed header, one row per point, 6
// significant digits, current_limited as 0/1. Byte-deterministic.
std::string to_csv(const SweepResult& result);

}  // namespace wptdock
