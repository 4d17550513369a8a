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

#include <string>
#include <vector>

#include "wptdock/align.hpp"
#include "wptdock/model.hpp"
#include "wptdock/sweep.hpp"

namespace wptdock {

// One experiment configuration document. All sections are optional; absent
// sections fall back to the stock setup: three default modules in series,
// default grids, the measured calibration target and the stock frustum.
// Unknown keys anywhere are rejected.
//
// Sections: module, network, sweep, calibration, frustum, battery,
// compare ({"topologies": [...]}), align ({"offset_mm": [dx, dy],
// "yaw_deg": y}).
struct ExperimentConfig {
  ModuleSpec module;
  ReceiverNetwork network;
  SweepConfig sweep;
  CalibrationTarget calibration;
  FrustumSpec frustum;
  BatterySpec battery;
  bool has_battery = false;
  std::vector<TopologyKind> compare_topologies;
  double align_dx_mm = 0.0;
  double align_dy_mm = 0.0;
  double align_yaw_deg = 0.0;
};

// Throws ConfigError with the offending key path in the message.
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace wptdock
