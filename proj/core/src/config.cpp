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

#include "wptdock/config.hpp"

#include <json.hpp>

#include "json_detail.hpp"
#include "json_util.hpp"
#include "wptdock/errors.hpp"

namespace wptdock {

using jsonutil::json;

namespace {

SweepConfig sweep_from_json(const json& j, TopologyKind default_topology,
                            const std::string& path) {
  jsonutil::require_object(j, "sweep");
  jsonutil::check_keys(j, path,
                       {"topology", "r_min", "r_max", "n_points", "spacing"});
  SweepConfig cfg = default_sweep_config(default_topology);
  if (j.contains("topology")) {
    cfg = default_sweep_config(topology_from_string(
        jsonutil::get_string(j, "topology", "", path)));
  }
  cfg.r_min = jsonutil::get_number(j, "r_min", cfg.r_min, path);
  cfg.r_max = jsonutil::get_number(j, "r_max", cfg.r_max, path);
  cfg.n_points = jsonutil::get_int(j, "n_points", cfg.n_points, path);
  if (j.contains("spacing")) {
    cfg.spacing =
        spacing_from_string(jsonutil::get_string(j, "spacing", "", path));
  }
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json root = jsonutil::parse_document(json_text);
  jsonutil::require_object(root, "config");
  jsonutil::check_keys(root, "",
                       {"module", "network", "sweep", "calibration", "frustum",
                        "battery", "compare", "align"});

  ExperimentConfig cfg;
  cfg.module = default_module_spec();
  if (root.contains("module")) {
    cfg.module = detail::module_from_json(root.at("module"), cfg.module,
                                          "module.");
  }

  if (root.contains("network")) {
    cfg.network =
        detail::network_from_json(root.at("network"), cfg.module, "network.");
  } else {
    cfg.network = default_network(TopologyKind::kSeriesConnection);
    cfg.network.modules.assign(cfg.network.modules.size(), cfg.module);
  }

  if (root.contains("sweep")) {
    cfg.sweep =
        sweep_from_json(root.at("sweep"), cfg.network.topology, "sweep.");
    if (cfg.sweep.topology != cfg.network.topology) {
      throw ConfigError("sweep.topology does not match network.topology");
    }
  } else {
    cfg.sweep = default_sweep_config(cfg.network.topology);
  }

  cfg.calibration = CalibrationTarget{};
  if (root.contains("calibration")) {
    const json& c = root.at("calibration");
    jsonutil::require_object(c, "calibration");
    jsonutil::check_keys(c, "calibration.",
                         {"p_out_peak", "eta_at_peak", "sweep"});
    cfg.calibration.p_out_peak = jsonutil::get_number(
        c, "p_out_peak", cfg.calibration.p_out_peak, "calibration.");
    cfg.calibration.eta_at_peak = jsonutil::get_number(
        c, "eta_at_peak", cfg.calibration.eta_at_peak, "calibration.");
    if (c.contains("sweep")) {
      cfg.calibration.sweep =
          sweep_from_json(c.at("sweep"), TopologyKind::kSeriesConnection,
                          "calibration.sweep.");
    }
  }

  cfg.frustum = FrustumSpec{};
  if (root.contains("frustum")) {
    cfg.frustum = detail::frustum_from_json(root.at("frustum"), "frustum.");
  }

  if (root.contains("battery")) {
    const json& b = root.at("battery");
    jsonutil::require_object(b, "battery");
    jsonutil::check_keys(b, "battery.",
                         {"capacity", "charge_efficiency", "initial_soc",
                          "target_soc"});
    if (!b.contains("capacity")) {
      throw ConfigError("battery.capacity is required");
    }
    cfg.battery.capacity =
        jsonutil::get_number(b, "capacity", 0.0, "battery.");
    cfg.battery.charge_efficiency = jsonutil::get_number(
        b, "charge_efficiency", cfg.battery.charge_efficiency, "battery.");
    cfg.battery.initial_soc = jsonutil::get_number(
        b, "initial_soc", cfg.battery.initial_soc, "battery.");
    cfg.battery.target_soc = jsonutil::get_number(
        b, "target_soc", cfg.battery.target_soc, "battery.");
    cfg.has_battery = true;
  }

  if (root.contains("compare")) {
    const json& c = root.at("compare");
    jsonutil::require_object(c, "compare");
    jsonutil::check_keys(c, "compare.", {"topologies"});
    if (!c.contains("topologies")) {
      throw ConfigError("compare.topologies is required");
    }
    const json& list = c.at("topologies");
    if (!list.is_array() || list.empty()) {
      throw ConfigError("compare.topologies must be a non-empty array");
    }
    for (const auto& entry : list) {
      if (!entry.is_string()) {
        throw ConfigError("compare.topologies entries must be strings");
      }
      cfg.compare_topologies.push_back(
          topology_from_string(entry.get<std::string>()));
    }
  } else {
    cfg.compare_topologies = {TopologyKind::kSeriesConnection,
                              TopologyKind::kParallelConnection,
                              TopologyKind::kParallelWithDiodes};
  }

  if (root.contains("align")) {
    const json& a = root.at("align");
    jsonutil::require_object(a, "align");
    jsonutil::check_keys(a, "align.", {"offset_mm", "yaw_deg"});
    if (a.contains("offset_mm")) {
      const json& off = a.at("offset_mm");
      if (!off.is_array() || off.size() != 2 || !off[0].is_number() ||
          !off[1].is_number()) {
        throw ConfigError("align.offset_mm must be [dx, dy]");
      }
      cfg.align_dx_mm = off[0].get<double>();
      cfg.align_dy_mm = off[1].get<double>();
    }
    cfg.align_yaw_deg =
        jsonutil::get_number(a, "yaw_deg", cfg.align_yaw_deg, "align.");
  }

  return cfg;
}

}  // namespace wptdock
