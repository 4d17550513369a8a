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

namespace wptdock {

// Behavioral parameters of one off-the-shelf wireless charging module
// (one transmitter/receiver coil pair, treated as a sealed unit).
// Units: V, A, ohm, W, mm.
struct ModuleSpec {
  double u_in_nominal = 24.0;   // transmitter supply voltage
  double u_out_nominal = 12.0;  // regulated receiver output voltage
  double i_out_max = 3.0;       // hard output current limit
  double eta_link = 0.95;       // DC-to-DC link efficiency, (0, 1]
  double r_droop = 0.5;         // output droop resistance
  double p_idle = 2.0;          // transmitter idle draw per powered module
  double gap_max = 10.0;        // maximum permissible coil gap
  double coil_inner_d = 30.0;
  double coil_outer_d = 82.0;
  double coil_h = 2.0;
};

ModuleSpec default_module_spec();

struct DiodeSpec {
  double v_forward = 0.7;      // constant conduction drop
  bool ideal_blocking = true;  // no reverse leakage (the only supported model)
};

enum class TopologyKind {
  kSeriesConnection,
  kParallelConnection,
  kParallelWithDiodes,
};

const char* to_string(TopologyKind kind);
TopologyKind topology_from_string(const std::string& name);

// Receiver-side network: N modules wired per `topology`, each coupled across
// its own coil gap, feeding a resistive load through shared output wiring.
//
// r_bus is the lumped resistance of the common output path (connection board
// traces, jumpers, leads). It carries the *total* output current, so parallel
// configurations pay for their 3x current here; this is the loss mechanism
// behind the measured series-vs-parallel power gap.
struct ReceiverNetwork {
  TopologyKind topology = TopologyKind::kSeriesConnection;
  std::vector<ModuleSpec> modules;
  std::vector<double> gaps;  // per-module coil gap, mm
  DiodeSpec diode;           // used only for kParallelWithDiodes
  double r_bus = 0.8;        // shared output wiring resistance, ohm
};

// N identical default modules, perfectly seated (all gaps 0).
ReceiverNetwork default_network(TopologyKind topology, int n_modules = 3);

// Lossless variant: zero droop, unit link efficiency, zero idle draw, zero
// bus resistance. Current limits stay at their defaults.
ReceiverNetwork ideal_network(TopologyKind topology, int n_modules = 3);

// One solved DC state of a network driving a resistive load.
struct OperatingPoint {
  double r_load = 0.0;
  double u_out = 0.0;  // voltage at the load
  double i_out = 0.0;  // current into the load
  double u_in = 0.0;   // transmitter supply voltage
  double i_in = 0.0;   // total transmitter supply current
  std::vector<double> per_module_i;  // receiver-side module currents
  std::vector<double> per_module_u;  // module terminal voltages
  std::vector<bool> diode_states;    // conducting flags; empty without diodes
  bool current_limited = false;
};

// Docking-station frustum geometry.
// mu defaults to 0.2: an assumed value, PETG-on-PETG friction is not well
// characterised. Callers should supply their own.
struct FrustumSpec {
  double slope_angle_deg = 12.7;  // face inclination from the vertical
  double mu = 0.2;                // ETU/ERU contact friction coefficient
  int face_count = 3;
  double base_size = 178.0;  // triangle side length at the base, mm
  double height = 155.0;     // mm
  double m_etu = 700.0;      // g
  double m_eru = 700.0;      // g
};

struct Violation {
  std::string field;
  std::string rule;
};

using ValidationReport = std::vector<Violation>;

// Violations are data, not failures: an empty report means all invariants
// hold. `prefix` is prepended to field names (e.g. "modules[2].").
ValidationReport validate(const ModuleSpec& spec, const std::string& prefix = "");
ValidationReport validate(const ReceiverNetwork& network);
ValidationReport validate(const FrustumSpec& frustum);

std::string format_report(const ValidationReport& report);

}  // namespace wptdock
