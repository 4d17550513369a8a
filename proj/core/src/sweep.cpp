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

#include "wptdock/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "wptdock/errors.hpp"

namespace wptdock {

const char* to_string(GridSpacing spacing) {
  return spacing == GridSpacing::kLinear ? "linear" : "logarithmic";
}

GridSpacing spacing_from_string(const std::string& name) {
  if (name == "linear") return GridSpacing::kLinear;
  if (name == "logarithmic") return GridSpacing::kLogarithmic;
  throw ConfigError("unknown spacing \"" + name +
                    "\" (expected linear or logarithmic)");
}

SweepConfig default_sweep_config(TopologyKind topology) {
  SweepConfig cfg;
  cfg.topology = topology;
  if (topology == TopologyKind::kSeriesConnection) {
    cfg.r_min = 10.0;
    cfg.r_max = 100.0;
  } else {
    cfg.r_min = 1.0;
    cfg.r_max = 10.0;
  }
  return cfg;
}

namespace {

void require_valid(const SweepConfig& cfg) {
  if (!std::isfinite(cfg.r_min) || !std::isfinite(cfg.r_max) ||
      cfg.r_min <= 0) {
    throw DegenerateInput("r_min must be > 0 and finite");
  }
  if (cfg.r_min >= cfg.r_max) {
    throw DegenerateInput("r_min must be < r_max");
  }
  if (cfg.n_points < 2) {
    throw DegenerateInput("n_points must be >= 2");
  }
}

}  // namespace

std::vector<double> sweep_grid(const SweepConfig& cfg) {
  require_valid(cfg);
  std::vector<double> grid(static_cast<std::size_t>(cfg.n_points));
  const int last = cfg.n_points - 1;
  if (cfg.spacing == GridSpacing::kLinear) {
    double step = (cfg.r_max - cfg.r_min) / last;
    for (int j = 0; j <= last; ++j) grid[j] = cfg.r_min + step * j;
  } else {
    double lo = std::log(cfg.r_min);
    double step = (std::log(cfg.r_max) - lo) / last;
    for (int j = 0; j <= last; ++j) grid[j] = std::exp(lo + step * j);
  }
  grid.front() = cfg.r_min;  // endpoints exact
  grid.back() = cfg.r_max;
  return grid;
}

Metrics compute_metrics(const OperatingPoint& point) {
  Metrics m;
  m.p_out = point.u_out * point.i_out;
  m.p_in = point.u_in * point.i_in;
  if (m.p_in == 0.0 && m.p_out > 0.0) {
    throw DegenerateInput("p_in is zero while p_out is positive");
  }
  m.eta = m.p_in > 0.0 ? m.p_out / m.p_in : 0.0;
  return m;
}

SweepResult run_sweep(const ReceiverNetwork& network, const SweepConfig& cfg,
                      const SolverConfig& solver) {
  if (cfg.topology != network.topology) {
    throw DegenerateInput("sweep.topology does not match network.topology");
  }
  ValidationReport report = validate(network);
  if (!report.empty()) {
    throw InvalidNetwork("invalid network: " + format_report(report));
  }
  SweepResult result;
  result.config = cfg;
  std::vector<double> grid = sweep_grid(cfg);
  result.points.reserve(grid.size());
  for (double r_load : grid) {
    OperatingPoint pt;
    try {
      pt = solve_operating_point(network, r_load, solver);
    } catch (const NonConvergence& e) {
      throw NonConvergence(std::string(e.what()) + " at r_load=" +
                               std::to_string(r_load) + " ohm",
                           r_load);
    }
    Metrics m = compute_metrics(pt);
    result.points.push_back({std::move(pt), m.p_out, m.p_in, m.eta});
  }
  return result;
}

MaxPowerPoint max_power_point(const SweepResult& result) {
  if (result.points.empty()) throw EmptySweep("sweep has no points");
  std::size_t best = 0;
  for (std::size_t j = 1; j < result.points.size(); ++j) {
    const SweepPoint& cand = result.points[j];
    const SweepPoint& cur = result.points[best];
    // Ties prefer higher efficiency; equal-on-both keeps the lower r_load
    // (points are ordered ascending).
    if (cand.p_out > cur.p_out ||
        (cand.p_out == cur.p_out && cand.eta > cur.eta)) {
      best = j;
    }
  }
  const SweepPoint& sp = result.points[best];
  return {best, sp.point, sp.p_out, sp.eta};
}

ComparisonReport compare_topologies(const std::vector<ReceiverNetwork>& networks,
                                    const std::vector<SweepConfig>& configs,
                                    const SolverConfig& solver) {
  if (networks.empty()) throw DegenerateInput("no networks to compare");
  if (networks.size() != configs.size()) {
    throw DegenerateInput("networks/configs length mismatch");
  }
  ComparisonReport report;
  for (std::size_t j = 0; j < networks.size(); ++j) {
    SweepResult sweep = run_sweep(networks[j], configs[j], solver);
    MaxPowerPoint mp = max_power_point(sweep);
    TopologySummary s;
    s.topology = configs[j].topology;
    s.peak_p_out = mp.p_out;
    s.eta_at_peak = mp.eta;
    s.r_load_at_peak = mp.point.r_load;
    s.peak_eta = 0.0;
    s.peak_u_out = 0.0;
    for (const SweepPoint& p : sweep.points) {
      s.peak_eta = std::max(s.peak_eta, p.eta);
      s.peak_u_out = std::max(s.peak_u_out, p.point.u_out);
    }
    double u_hi = sweep.points.back().point.u_out;
    double u_lo = sweep.points.front().point.u_out;
    s.droop_ratio = u_hi > 0 ? (u_hi - u_lo) / u_hi : 0.0;
    report.topologies.push_back(s);
  }

  auto find_peak = [&](TopologyKind kind) -> const TopologySummary* {
    for (const TopologySummary& s : report.topologies) {
      if (s.topology == kind) return &s;
    }
    return nullptr;
  };
  const TopologySummary* sc = find_peak(TopologyKind::kSeriesConnection);
  const TopologySummary* pc = find_peak(TopologyKind::kParallelConnection);
  const TopologySummary* pcd = find_peak(TopologyKind::kParallelWithDiodes);
  if (sc && pc && pc->peak_p_out > 0) {
    report.sc_pc_peak_ratio = sc->peak_p_out / pc->peak_p_out;
  }
  if (sc && pcd && pcd->peak_p_out > 0) {
    report.sc_pc_diodes_peak_ratio = sc->peak_p_out / pcd->peak_p_out;
  }
  return report;
}

namespace {

struct PeakEval {
  double p_out;
  double eta;
  double p_module_total;  // sum of non-negative module output powers
  int live_modules;
};

ReceiverNetwork calibration_network(const ModuleSpec& spec,
                                    const CalibrationOptions& opt) {
  ReceiverNetwork net = default_network(TopologyKind::kSeriesConnection,
                                        opt.n_modules);
  net.modules.assign(static_cast<std::size_t>(opt.n_modules), spec);
  net.r_bus = opt.r_bus;
  return net;
}

PeakEval evaluate_peak(const ModuleSpec& spec, const CalibrationTarget& target,
                       const CalibrationOptions& opt) {
  SweepResult sweep = run_sweep(calibration_network(spec, opt), target.sweep);
  MaxPowerPoint mp = max_power_point(sweep);
  PeakEval out;
  out.p_out = mp.p_out;
  out.eta = mp.eta;
  out.p_module_total = 0.0;
  out.live_modules = opt.n_modules;
  for (std::size_t k = 0; k < mp.point.per_module_i.size(); ++k) {
    double p = mp.point.per_module_u[k] * mp.point.per_module_i[k];
    if (p > 0) out.p_module_total += p;
  }
  return out;
}

}  // namespace

ModuleSpec calibrate(const CalibrationTarget& target, const ModuleSpec& base,
                     const CalibrationOptions& opt) {
  if (!std::isfinite(target.p_out_peak) || target.p_out_peak <= 0) {
    throw DegenerateInput("p_out_peak must be > 0");
  }
  if (target.sweep.topology != TopologyKind::kSeriesConnection) {
    throw DegenerateInput("calibration sweep must use the series topology");
  }
  if (!(target.eta_at_peak > 0.0 && target.eta_at_peak < 1.0)) {
    throw CalibrationInfeasible(
        "eta_at_peak outside (0,1) is unreachable with a lossy link and "
        "nonzero idle draw",
        base.r_droop, base.eta_link, 0.0, 0.0);
  }

  auto with_droop = [&](double r_droop) {
    ModuleSpec m = base;
    m.r_droop = r_droop;
    return m;
  };

  // Grid peak power is independent of eta_link and non-increasing in
  // r_droop, so bracket and bisect.
  PeakEval at_min = evaluate_peak(with_droop(opt.r_droop_min), target, opt);
  PeakEval at_max = evaluate_peak(with_droop(opt.r_droop_max), target, opt);
  const double p_tol = opt.p_tol_rel * target.p_out_peak;
  if (at_min.p_out < target.p_out_peak - p_tol) {
    throw CalibrationInfeasible(
        "target peak power above the reachable maximum",
        opt.r_droop_min, base.eta_link, at_min.p_out, at_min.eta);
  }
  if (at_max.p_out > target.p_out_peak + p_tol) {
    throw CalibrationInfeasible(
        "target peak power below the reachable minimum",
        opt.r_droop_max, base.eta_link, at_max.p_out, at_max.eta);
  }

  double lo = opt.r_droop_min, hi = opt.r_droop_max;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    PeakEval e = evaluate_peak(with_droop(mid), target, opt);
    if (e.p_out > target.p_out_peak) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_droop = 0.5 * (lo + hi);
  PeakEval peak = evaluate_peak(with_droop(r_droop), target, opt);

  // Efficiency at the peak point:
  //   eta = p_out / (p_module_total / eta_link + live * p_idle)
  // solved for eta_link.
  double idle_total = static_cast<double>(peak.live_modules) * base.p_idle;
  double denom = peak.p_out / target.eta_at_peak - idle_total;
  if (denom <= 0 || peak.p_module_total <= 0) {
    throw CalibrationInfeasible(
        "eta_at_peak unreachable: idle draw alone exceeds the implied input "
        "power",
        r_droop, base.eta_link, peak.p_out, peak.eta);
  }
  double eta_link = peak.p_module_total / denom;
  if (eta_link > 1.0 + 1e-12 || eta_link <= opt.eta_link_min) {
    ModuleSpec best = with_droop(r_droop);
    best.eta_link = std::clamp(eta_link, opt.eta_link_min + 1e-9, 1.0);
    PeakEval e = evaluate_peak(best, target, opt);
    throw CalibrationInfeasible(
        "eta_at_peak requires a link efficiency outside (eta_link_min, 1]",
        r_droop, best.eta_link, e.p_out, e.eta);
  }
  eta_link = std::min(eta_link, 1.0);

  ModuleSpec out = with_droop(r_droop);
  out.eta_link = eta_link;

  PeakEval check = evaluate_peak(out, target, opt);
  if (std::abs(check.p_out - target.p_out_peak) > p_tol ||
      std::abs(check.eta - target.eta_at_peak) > opt.eta_tol_abs) {
    throw CalibrationInfeasible("calibration residual above tolerance",
                                r_droop, eta_link, check.p_out, check.eta);
  }
  return out;
}

double estimate_charge_time(const BatterySpec& battery,
                            double delivered_power_w) {
  if (!std::isfinite(delivered_power_w) || delivered_power_w <= 0) {
    throw DegenerateInput("delivered_power must be > 0");
  }
  if (!std::isfinite(battery.capacity) || battery.capacity <= 0) {
    throw DegenerateInput("battery.capacity must be > 0");
  }
  if (!(battery.charge_efficiency > 0 && battery.charge_efficiency <= 1)) {
    throw DegenerateInput("battery.charge_efficiency out of (0,1]");
  }
  if (battery.initial_soc < 0 || battery.target_soc > 1 ||
      battery.initial_soc > battery.target_soc) {
    throw DegenerateInput("battery SoC bounds invalid");
  }
  return battery.capacity * (battery.target_soc - battery.initial_soc) /
         (delivered_power_w * battery.charge_efficiency);
}

std::string to_csv(const SweepResult& result) {
  std::string out =
      "r_load_ohm,u_out_v,i_out_a,i_in_a,p_out_w,p_in_w,eta,current_limited\n";
  char row[256];
  for (const SweepPoint& p : result.points) {
    std::snprintf(row, sizeof(row), "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%d\n",
                  p.point.r_load, p.point.u_out, p.point.i_out, p.point.i_in,
                  p.p_out, p.p_in, p.eta, p.point.current_limited ? 1 : 0);
    out += row;
  }
  return out;
}

}  // namespace wptdock
