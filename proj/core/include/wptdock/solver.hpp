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

#include "wptdock/model.hpp"

namespace wptdock {

struct SolverConfig {
  double residual_tol = 1e-9;  // relative Ohm's-law residual at the load
  int max_iterations = 50;     // bound on regime-switch iterations
};

// DC operating point of `network` driving a resistive load (ohm).
//
// The network is piecewise linear under the module model (regulated /
// current-limited per module, conducting / blocking per diode), so the solve
// walks the regime breakpoints directly and solves each linear regime in
// closed form; no damped iteration is needed. Guarantees on the result:
//
//   - Ohm's law at the load within residual_tol.
//   - Series: all per_module_i equal; a module with gap > gap_max becomes a
//     zero-voltage pass-through (the chain has no bypass path).
//   - Parallel: conducting branches share the bus voltage; a module with
//     gap > gap_max is an open branch. Branch currents may be negative only
//     without diodes (back-feeding).
//   - Current limits are hard: series i_out <= min module limit, each
//     parallel branch <= its own limit.
//
// Throws InvalidNetwork, DegenerateInput (r_load <= 0), NonConvergence.
OperatingPoint solve_operating_point(const ReceiverNetwork& network,
                                     double r_load,
                                     const SolverConfig& config = {});

// Verification oracle for kParallelWithDiodes, N <= 10: enumerates diode
// conduction-state assignments (and, within each, which conducting branches
// sit at their current limit), solves every linear sub-network, and returns
// the unique assignment consistent with diode complementarity
// (conducting => branch current >= 0; blocking => forward bias <= v_forward).
// Ties prefer the larger conducting set. Deliberately shares no code with
// solve_operating_point.
//
// Throws NoConsistentState on model inconsistency (a solver bug, not a user
// error).
OperatingPoint diode_state_oracle(const ReceiverNetwork& network,
                                  double r_load,
                                  const SolverConfig& config = {});

// Regulated-regime terminal voltage of one module carrying current i (A)
// across coil gap gap_mm: 0 beyond the gap limit, otherwise the droop law
// clamped at zero. Not meaningful past i_out_max (the solver switches the
// module to constant-current mode instead).
double module_terminal_voltage(const ModuleSpec& spec, double i,
                               double gap_mm);

struct InputPower {
  double p_in;  // W
  double i_in;  // A, referred to the shared transmitter supply
};

// Transmitter-side power for a solved point:
//   P_in = sum over coupled modules of (max(0, P_module) / eta_link + p_idle)
// A module with gap > gap_max contributes nothing (the pair is off). The
// supply voltage is taken from the first module (one shared DC supply).
InputPower input_power(const ReceiverNetwork& network,
                       const OperatingPoint& point);

}  // namespace wptdock
