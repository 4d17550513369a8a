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

#include "wptdock/model.hpp"

#include <cmath>

#include "wptdock/errors.hpp"

namespace wptdock {

ModuleSpec default_module_spec() { return ModuleSpec{}; }

const char* to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kSeriesConnection:
      return "series";
    case TopologyKind::kParallelConnection:
      return "parallel";
    case TopologyKind::kParallelWithDiodes:
      return "parallel_with_diodes";
  }
  return "unknown";
}

TopologyKind topology_from_string(const std::string& name) {
  if (name == "series") return TopologyKind::kSeriesConnection;
  if (name == "parallel") return TopologyKind::kParallelConnection;
  if (name == "parallel_with_diodes") return TopologyKind::kParallelWithDiodes;
  throw ConfigError("unknown topology \"" + name +
                    "\" (expected series, parallel or parallel_with_diodes)");
}

ReceiverNetwork default_network(TopologyKind topology, int n_modules) {
  ReceiverNetwork net;
  net.topology = topology;
  net.modules.assign(static_cast<std::size_t>(n_modules), default_module_spec());
  net.gaps.assign(static_cast<std::size_t>(n_modules), 0.0);
  return net;
}

ReceiverNetwork ideal_network(TopologyKind topology, int n_modules) {
  ReceiverNetwork net = default_network(topology, n_modules);
  for (ModuleSpec& m : net.modules) {
    m.r_droop = 0.0;
    m.eta_link = 1.0;
    m.p_idle = 0.0;
  }
  net.r_bus = 0.0;
  return net;
}

namespace {

bool finite(double x) { return std::isfinite(x); }

void check(ValidationReport& report, bool ok, const std::string& field,
           const std::string& rule) {
  if (!ok) report.push_back({field, rule});
}

}  // namespace

ValidationReport validate(const ModuleSpec& m, const std::string& prefix) {
  ValidationReport r;
  check(r, finite(m.u_in_nominal) && m.u_in_nominal > 0,
        prefix + "u_in_nominal", "must be > 0");
  check(r, finite(m.u_out_nominal) && m.u_out_nominal > 0,
        prefix + "u_out_nominal", "must be > 0");
  check(r, finite(m.i_out_max) && m.i_out_max > 0, prefix + "i_out_max",
        "must be > 0");
  check(r, finite(m.eta_link) && m.eta_link > 0 && m.eta_link <= 1,
        prefix + "eta_link", "eta_link out of (0,1]");
  check(r, finite(m.r_droop) && m.r_droop >= 0, prefix + "r_droop",
        "must be >= 0");
  check(r, finite(m.p_idle) && m.p_idle >= 0, prefix + "p_idle",
        "must be >= 0");
  check(r, finite(m.gap_max) && m.gap_max > 0, prefix + "gap_max",
        "must be > 0");
  check(r, finite(m.coil_inner_d) && finite(m.coil_outer_d) &&
           m.coil_inner_d < m.coil_outer_d,
        prefix + "coil_inner_d", "must be < coil_outer_d");
  return r;
}

ValidationReport validate(const ReceiverNetwork& net) {
  ValidationReport r;
  check(r, !net.modules.empty(), "modules", "must contain at least one module");
  for (std::size_t k = 0; k < net.modules.size(); ++k) {
    ValidationReport mr =
        validate(net.modules[k], "modules[" + std::to_string(k) + "].");
    r.insert(r.end(), mr.begin(), mr.end());
  }
  check(r, net.gaps.size() == net.modules.size(), "gaps",
        "gaps/modules length mismatch");
  for (std::size_t k = 0; k < net.gaps.size(); ++k) {
    check(r, finite(net.gaps[k]) && net.gaps[k] >= 0,
          "gaps[" + std::to_string(k) + "]", "must be >= 0");
  }
  check(r, finite(net.diode.v_forward) && net.diode.v_forward >= 0,
        "diode.v_forward", "must be >= 0");
  check(r, net.diode.ideal_blocking, "diode.ideal_blocking",
        "only ideal blocking is modeled");
  check(r, finite(net.r_bus) && net.r_bus >= 0, "r_bus", "must be >= 0");
  return r;
}

ValidationReport validate(const FrustumSpec& f) {
  ValidationReport r;
  check(r, finite(f.slope_angle_deg) && f.slope_angle_deg > 0 &&
           f.slope_angle_deg < 90,
        "slope_angle_deg", "must be in (0,90)");
  check(r, finite(f.mu) && f.mu >= 0, "mu", "must be >= 0");
  check(r, f.face_count >= 3, "face_count", "must be >= 3");
  check(r, finite(f.base_size) && f.base_size > 0, "base_size", "must be > 0");
  check(r, finite(f.height) && f.height > 0, "height", "must be > 0");
  return r;
}

std::string format_report(const ValidationReport& report) {
  std::string out;
  for (const Violation& v : report) {
    if (!out.empty()) out += "; ";
    out += v.field + ": " + v.rule;
  }
  return out;
}

}  // namespace wptdock
