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

#include <string>

#include <doctest.h>

#include "wptdock/config.hpp"
#include "wptdock/errors.hpp"

using namespace wptdock;

TEST_CASE("empty config falls back to the paper defaults") {
  ExperimentConfig cfg = parse_config("{}");
  CHECK(cfg.network.topology == TopologyKind::kSeriesConnection);
  CHECK(cfg.network.modules.size() == 3);
  CHECK(cfg.network.r_bus == 0.8);
  CHECK(cfg.sweep.r_min == 10.0);
  CHECK(cfg.sweep.r_max == 100.0);
  CHECK(cfg.sweep.n_points == 100);
  CHECK(cfg.calibration.p_out_peak == 96.5);
  CHECK(cfg.calibration.eta_at_peak == 0.566);
  CHECK(cfg.frustum.slope_angle_deg == 12.7);
  CHECK_FALSE(cfg.has_battery);
  CHECK(cfg.compare_topologies.size() == 3);
}

TEST_CASE("module section overrides propagate into the network") {
  ExperimentConfig cfg = parse_config(R"({
    "module": {"r_droop": 0.25, "eta_link": 0.7},
    "network": {"topology": "parallel"}
  })");
  CHECK(cfg.network.topology == TopologyKind::kParallelConnection);
  for (const ModuleSpec& m : cfg.network.modules) {
    CHECK(m.r_droop == 0.25);
    CHECK(m.eta_link == 0.7);
    CHECK(m.u_out_nominal == 12.0);  // untouched default
  }
  CHECK(cfg.sweep.r_min == 1.0);  // parallel default range
  CHECK(cfg.sweep.r_max == 10.0);
}

TEST_CASE("unknown keys are rejected at every level") {
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_config(R"({"modlue": {}})")),
                       "unknown key \"modlue\"", ConfigError);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(parse_config(R"({"module": {"r_drop": 1}})")),
      "unknown key \"module.r_drop\"", ConfigError);
  CHECK_THROWS_AS(
      static_cast<void>(parse_config(R"({"network": {"topo": "series"}})")),
      ConfigError);
  CHECK_THROWS_AS(
      static_cast<void>(
          parse_config(R"({"sweep": {"r_min": 1, "r_mox": 10}})")),
      ConfigError);
}

TEST_CASE("malformed documents and wrong types are config errors") {
  CHECK_THROWS_AS(static_cast<void>(parse_config("not json")), ConfigError);
  CHECK_THROWS_AS(static_cast<void>(parse_config("[1,2,3]")), ConfigError);
  CHECK_THROWS_AS(
      static_cast<void>(parse_config(R"({"module": {"r_droop": "x"}})")),
      ConfigError);
  CHECK_THROWS_AS(
      static_cast<void>(parse_config(R"({"sweep": {"n_points": 2.5}})")),
      ConfigError);
}

TEST_CASE("sweep topology must match the network") {
  CHECK_THROWS_WITH_AS(
      static_cast<void>(parse_config(R"({
        "network": {"topology": "series"},
        "sweep": {"topology": "parallel"}
      })")),
      "sweep.topology does not match network.topology", ConfigError);
}

TEST_CASE("explicit module list and gaps are honored") {
  ExperimentConfig cfg = parse_config(R"({
    "module": {"r_droop": 0.1},
    "network": {
      "topology": "parallel_with_diodes",
      "modules": [{}, {"u_out_nominal": 11.5}],
      "gaps": [0, 12],
      "diode": {"v_forward": 0.45},
      "r_bus": 0.2
    }
  })");
  REQUIRE(cfg.network.modules.size() == 2);
  CHECK(cfg.network.modules[0].r_droop == 0.1);  // inherits the module base
  CHECK(cfg.network.modules[1].u_out_nominal == 11.5);
  CHECK(cfg.network.gaps[1] == 12.0);
  CHECK(cfg.network.diode.v_forward == 0.45);
  CHECK(cfg.network.r_bus == 0.2);
}

TEST_CASE("gaps alone size the module list") {
  ExperimentConfig cfg =
      parse_config(R"({"network": {"gaps": [0, 0, 0, 0, 0]}})");
  CHECK(cfg.network.modules.size() == 5);
}

TEST_CASE("battery section requires capacity") {
  ExperimentConfig cfg = parse_config(
      R"({"battery": {"capacity": 77.7, "charge_efficiency": 0.9}})");
  CHECK(cfg.has_battery);
  CHECK(cfg.battery.capacity == 77.7);
  CHECK(cfg.battery.charge_efficiency == 0.9);
  CHECK_THROWS_AS(
      static_cast<void>(parse_config(R"({"battery": {"initial_soc": 0}})")),
      ConfigError);
}

TEST_CASE("compare and align sections parse") {
  ExperimentConfig cfg = parse_config(R"({
    "compare": {"topologies": ["series", "parallel"]},
    "align": {"offset_mm": [3, -4], "yaw_deg": 150}
  })");
  REQUIRE(cfg.compare_topologies.size() == 2);
  CHECK(cfg.compare_topologies[0] == TopologyKind::kSeriesConnection);
  CHECK(cfg.compare_topologies[1] == TopologyKind::kParallelConnection);
  CHECK(cfg.align_dx_mm == 3.0);
  CHECK(cfg.align_dy_mm == -4.0);
  CHECK(cfg.align_yaw_deg == 150.0);

  CHECK_THROWS_AS(
      static_cast<void>(parse_config(R"({"compare": {"topologies": []}})")),
      ConfigError);
  CHECK_THROWS_AS(
      static_cast<void>(parse_config(R"({"align": {"offset_mm": [1]}})")),
      ConfigError);
}
