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

#include <cmath>

#include <doctest.h>

#include "test_support.hpp"
#include "wptdock/errors.hpp"
#include "wptdock/solver.hpp"

using namespace wptdock;
using testsupport::Rng;

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("ideal series chain sums the source voltages") {
  ReceiverNetwork net = ideal_network(TopologyKind::kSeriesConnection);
  OperatingPoint pt = solve_operating_point(net, 36.0);
  CHECK(pt.u_out == 36.0);
  CHECK(pt.i_out == 1.0);
  CHECK_FALSE(pt.current_limited);
  for (double i : pt.per_module_i) CHECK(i == 1.0);
  for (double u : pt.per_module_u) CHECK(u == 12.0);
  CHECK(pt.diode_states.empty());
}

TEST_CASE("ideal parallel bus holds the source voltage") {
  ReceiverNetwork net = ideal_network(TopologyKind::kParallelConnection);
  OperatingPoint pt = solve_operating_point(net, 4.0);
  CHECK(pt.u_out == 12.0);
  CHECK(pt.i_out == 3.0);
  REQUIRE(pt.per_module_i.size() == 3);
  for (double i : pt.per_module_i) CHECK(i == 1.0);
  CHECK_FALSE(pt.current_limited);
}

TEST_CASE("series current limit clamps at the smallest module limit") {
  // Unconstrained current would be 3.6 A; the analytic constant-current
  // region gives u = i_limit * r_load.
  ReceiverNetwork net = ideal_network(TopologyKind::kSeriesConnection);
  OperatingPoint pt = solve_operating_point(net, 10.0);
  CHECK(pt.i_out == 3.0);
  CHECK(pt.u_out == 30.0);
  CHECK(pt.current_limited);
}

TEST_CASE("parallel with diodes drops the bus by the forward voltage") {
  ReceiverNetwork net = ideal_network(TopologyKind::kParallelWithDiodes);
  OperatingPoint pt = solve_operating_point(net, 11.3);
  CHECK(pt.u_out == doctest::Approx(11.3).epsilon(1e-12));
  CHECK(pt.i_out == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(pt.diode_states.size() == 3);
  for (bool s : pt.diode_states) CHECK(s);
  for (double u : pt.per_module_u) CHECK(u == 12.0);
}

TEST_CASE("module terminal voltage follows the droop law") {
  ModuleSpec m = default_module_spec();
  CHECK(module_terminal_voltage(m, 0.0, 5.0) == 12.0);
  CHECK(module_terminal_voltage(m, 2.0, 5.0) == 11.0);  // 12 - 0.5*2
  CHECK(module_terminal_voltage(m, 2.0, 12.0) == 0.0);  // beyond gap_max
  m.r_droop = 100.0;
  CHECK(module_terminal_voltage(m, 2.0, 5.0) == 0.0);  // clamped
}

TEST_CASE("input power is lossless for an ideal network") {
  ReceiverNetwork net = ideal_network(TopologyKind::kSeriesConnection);
  OperatingPoint pt = solve_operating_point(net, 36.0);
  InputPower in = input_power(net, pt);
  CHECK(in.p_in == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(in.i_in == doctest::Approx(1.5).epsilon(1e-12));  // 36 W / 24 V
}

TEST_CASE("input power applies the per-module link efficiency and idle draw") {
  // Three modules delivering 10 W each at eta_link = 0.5 draw 60 W.
  ReceiverNetwork net = ideal_network(TopologyKind::kParallelConnection);
  for (ModuleSpec& m : net.modules) m.eta_link = 0.5;
  OperatingPoint pt;
  pt.per_module_i = {1.0, 1.0, 1.0};
  pt.per_module_u = {10.0, 10.0, 10.0};
  CHECK(input_power(net, pt).p_in == doctest::Approx(60.0));
  for (ModuleSpec& m : net.modules) m.p_idle = 2.0;
  CHECK(input_power(net, pt).p_in == doctest::Approx(66.0));
}

TEST_CASE("dead module in series becomes a zero-volt pass-through") {
  ReceiverNetwork net = ideal_network(TopologyKind::kSeriesConnection);
  net.gaps[1] = 12.0;  // beyond the 10 mm limit
  OperatingPoint pt = solve_operating_point(net, 24.0);
  CHECK(pt.u_out == 24.0);  // two live 12 V sources
  CHECK(pt.i_out == 1.0);
  CHECK(pt.per_module_u[1] == 0.0);
  CHECK(pt.per_module_i[1] == 1.0);  // the chain current still flows through
}

TEST_CASE("dead module in parallel opens its branch") {
  ReceiverNetwork net = ideal_network(TopologyKind::kParallelWithDiodes);
  net.gaps[1] = 12.0;
  OperatingPoint pt = solve_operating_point(net, 6.0);
  CHECK(pt.per_module_i[1] == 0.0);
  REQUIRE(pt.diode_states.size() == 3);
  CHECK(pt.diode_states[0]);
  CHECK_FALSE(pt.diode_states[1]);
  CHECK(pt.diode_states[2]);
}

TEST_CASE("oracle agrees on the dead-branch example") {
  ReceiverNetwork net = ideal_network(TopologyKind::kParallelWithDiodes);
  net.gaps[1] = 12.0;
  OperatingPoint oracle = diode_state_oracle(net, 6.0);
  OperatingPoint solved = solve_operating_point(net, 6.0);
  CHECK(close(oracle.u_out, solved.u_out, 1e-9));
  CHECK(oracle.per_module_i[1] == 0.0);
  CHECK_FALSE(oracle.diode_states[1]);
}

TEST_CASE("oracle reduces to a single-source solve for N = 1") {
  ReceiverNetwork net = default_network(TopologyKind::kParallelWithDiodes, 1);
  net.r_bus = 0.0;
  for (double r_load : {1.0, 3.7, 10.0, 50.0}) {
    OperatingPoint oracle = diode_state_oracle(net, r_load);
    OperatingPoint solved = solve_operating_point(net, r_load);
    CHECK(close(oracle.u_out, solved.u_out, 1e-9));
    CHECK(close(oracle.i_out, solved.i_out, 1e-9));
    // Direct analytic check: single branch, bus = (V - vf - i r) with
    // current limit.
    double i = (12.0 - 0.7) / (r_load + 0.5);
    if (i > 3.0) i = 3.0;
    CHECK(oracle.i_out == doctest::Approx(i).epsilon(1e-9));
  }
}

TEST_CASE("oracle equivalence on the symmetric default network") {
  ReceiverNetwork net = default_network(TopologyKind::kParallelWithDiodes);
  for (double r_load = 1.0; r_load <= 10.0; r_load += 0.5) {
    OperatingPoint oracle = diode_state_oracle(net, r_load);
    OperatingPoint solved = solve_operating_point(net, r_load);
    CHECK(close(oracle.u_out, solved.u_out, 1e-8));
    CHECK(close(oracle.i_out, solved.i_out, 1e-8));
  }
}

TEST_CASE("property: oracle equivalence on randomized diode networks") {
  Rng rng(0x5eed0001);
  const SolverConfig cfg;
  const double tol = 10.0 * cfg.residual_tol;
  for (int trial = 0; trial < 300; ++trial) {
    ReceiverNetwork net =
        testsupport::random_network(rng, TopologyKind::kParallelWithDiodes);
    double r_load = testsupport::log_uniform(rng, 0.5, 200.0);
    CAPTURE(trial);
    CAPTURE(r_load);
    OperatingPoint solved = solve_operating_point(net, r_load, cfg);
    OperatingPoint oracle = diode_state_oracle(net, r_load, cfg);
    CHECK(close(solved.u_out, oracle.u_out, tol));
    CHECK(close(solved.i_out, oracle.i_out, tol));
    REQUIRE(solved.per_module_i.size() == oracle.per_module_i.size());
    for (std::size_t k = 0; k < solved.per_module_i.size(); ++k) {
      CHECK(close(solved.per_module_i[k], oracle.per_module_i[k], tol));
      if (solved.per_module_i[k] > tol) {
        CHECK(solved.diode_states[k] == oracle.diode_states[k]);
      }
    }
  }
}

TEST_CASE("property: conservation and efficiency bounds") {
  Rng rng(0x5eed0002);
  const TopologyKind kinds[] = {TopologyKind::kSeriesConnection,
                                TopologyKind::kParallelConnection,
                                TopologyKind::kParallelWithDiodes};
  for (int trial = 0; trial < 600; ++trial) {
    TopologyKind kind = kinds[trial % 3];
    ReceiverNetwork net = testsupport::random_network(rng, kind);
    double r_load = testsupport::log_uniform(rng, 0.5, 200.0);
    CAPTURE(trial);
    OperatingPoint pt = solve_operating_point(net, r_load);
    double p_out = pt.u_out * pt.i_out;
    double p_in = pt.u_in * pt.i_in;
    CHECK(p_out <= p_in * (1.0 + 1e-12) + 1e-12);
    if (p_out > 0) {
      double eta = p_out / p_in;
      CHECK(eta > 0.0);
      CHECK(eta <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("property: KCL across parallel branches, equal series currents") {
  Rng rng(0x5eed0003);
  for (int trial = 0; trial < 200; ++trial) {
    ReceiverNetwork net = testsupport::random_network(
        rng, trial % 2 == 0 ? TopologyKind::kParallelConnection
                            : TopologyKind::kParallelWithDiodes);
    double r_load = testsupport::log_uniform(rng, 0.5, 100.0);
    OperatingPoint pt = solve_operating_point(net, r_load);
    double sum = 0.0;
    for (double i : pt.per_module_i) sum += i;
    CHECK(close(sum, pt.i_out, 1e-9));
  }
  Rng rng2(0x5eed0004);
  for (int trial = 0; trial < 100; ++trial) {
    ReceiverNetwork net =
        testsupport::random_network(rng2, TopologyKind::kSeriesConnection);
    OperatingPoint pt =
        solve_operating_point(net, testsupport::log_uniform(rng2, 1.0, 200.0));
    for (double i : pt.per_module_i) CHECK(i == pt.i_out);
  }
}

TEST_CASE("property: series voltage/current monotonicity in r_load") {
  Rng rng(0x5eed0005);
  for (int trial = 0; trial < 50; ++trial) {
    ReceiverNetwork net =
        testsupport::random_network(rng, TopologyKind::kSeriesConnection);
    double prev_u = -1.0, prev_i = 1e300;
    for (int j = 0; j < 40; ++j) {
      double r_load = 0.5 * std::pow(1.2, j);
      OperatingPoint pt = solve_operating_point(net, r_load);
      CHECK(pt.u_out >= prev_u - 1e-9);
      CHECK(pt.i_out <= prev_i + 1e-9);
      prev_u = pt.u_out;
      prev_i = pt.i_out;
    }
  }
}

TEST_CASE("property: default current limits are never exceeded") {
  Rng rng(0x5eed0006);
  for (int trial = 0; trial < 100; ++trial) {
    double r_load = testsupport::log_uniform(rng, 0.05, 200.0);
    OperatingPoint sc = solve_operating_point(
        default_network(TopologyKind::kSeriesConnection), r_load);
    CHECK(sc.i_out <= 3.0);
    OperatingPoint pc = solve_operating_point(
        default_network(TopologyKind::kParallelConnection), r_load);
    CHECK(pc.i_out <= 9.0);
    OperatingPoint pcd = solve_operating_point(
        default_network(TopologyKind::kParallelWithDiodes), r_load);
    CHECK(pcd.i_out <= 9.0);
  }
}

TEST_CASE("property: solves are bit-deterministic") {
  Rng rng(0x5eed0007);
  const TopologyKind kinds[] = {TopologyKind::kSeriesConnection,
                                TopologyKind::kParallelConnection,
                                TopologyKind::kParallelWithDiodes};
  for (int trial = 0; trial < 60; ++trial) {
    ReceiverNetwork net = testsupport::random_network(rng, kinds[trial % 3]);
    double r_load = testsupport::log_uniform(rng, 0.5, 100.0);
    OperatingPoint a = solve_operating_point(net, r_load);
    OperatingPoint b = solve_operating_point(net, r_load);
    CHECK(a.u_out == b.u_out);
    CHECK(a.i_out == b.i_out);
    CHECK(a.i_in == b.i_in);
    CHECK(a.per_module_i == b.per_module_i);
    CHECK(a.per_module_u == b.per_module_u);
    CHECK(a.diode_states == b.diode_states);
    CHECK(a.current_limited == b.current_limited);
  }
}

TEST_CASE("unequal droop shares current unevenly without diodes") {
  ReceiverNetwork net = default_network(TopologyKind::kParallelConnection);
  net.r_bus = 0.0;
  net.modules[0].r_droop = 0.2;
  net.modules[1].r_droop = 0.5;
  net.modules[2].r_droop = 1.0;
  OperatingPoint pt = solve_operating_point(net, 5.0);
  CHECK(pt.per_module_i[0] > pt.per_module_i[1]);
  CHECK(pt.per_module_i[1] > pt.per_module_i[2]);
}

TEST_CASE("a weak source is back-fed without diodes and blocked with them") {
  ReceiverNetwork net = default_network(TopologyKind::kParallelConnection);
  net.r_bus = 0.0;
  net.modules[2].u_out_nominal = 5.0;  // much weaker than its peers
  OperatingPoint pc = solve_operating_point(net, 50.0);
  CHECK(pc.per_module_i[2] < 0.0);  // circulating current into the weak module

  net.topology = TopologyKind::kParallelWithDiodes;
  OperatingPoint pcd = solve_operating_point(net, 50.0);
  CHECK(pcd.per_module_i[2] == 0.0);
  CHECK_FALSE(pcd.diode_states[2]);
  // Isolation keeps the back-fed loss out of the circuit entirely.
  CHECK(pcd.u_out > pc.u_out);
}

TEST_CASE("regression: series active set when the root sits past a clamp point") {
  // Heterogeneous chain whose unconstrained current crosses module 0's
  // terminal-clamp point; the regime scan must drop that module even though
  // the segment endpoint is its own clamp point.
  ReceiverNetwork net;
  net.topology = TopologyKind::kSeriesConnection;
  ModuleSpec base = default_module_spec();
  auto add = [&](double v, double r, double imax, double gap) {
    ModuleSpec m = base;
    m.u_out_nominal = v;
    m.r_droop = r;
    m.i_out_max = imax;
    net.modules.push_back(m);
    net.gaps.push_back(gap);
  };
  add(3.2094341203392189, 1.5077784234056117, 4.7100652225144692, 1.26);
  add(8.7748774557759273, 0.18885068977361624, 3.8098371719965081, 7.6);
  add(5.397569701428365, 0.9908451900939742, 4.7913790802943366, 5.43);
  add(10.994891927467625, 0.0, 2.4186581117601325, 12.0);
  net.r_bus = 0.96120043320574466;
  OperatingPoint pt = solve_operating_point(net, 1.3273249906298188);
  CHECK(pt.current_limited);
  CHECK(pt.i_out == doctest::Approx(3.8098371719965081));
  CHECK(pt.per_module_u[0] == 0.0);  // clamped out of the chain
  CHECK(pt.per_module_u[3] == 0.0);  // dead pass-through
}

TEST_CASE("solver rejects invalid input") {
  ReceiverNetwork net = default_network(TopologyKind::kSeriesConnection);
  CHECK_THROWS_AS(solve_operating_point(net, 0.0), DegenerateInput);
  CHECK_THROWS_AS(solve_operating_point(net, -5.0), DegenerateInput);
  net.gaps.resize(2);
  CHECK_THROWS_AS(solve_operating_point(net, 10.0), InvalidNetwork);
  ReceiverNetwork pc = default_network(TopologyKind::kParallelConnection);
  CHECK_THROWS_AS(diode_state_oracle(pc, 10.0), DegenerateInput);
}

TEST_CASE("all modules dead yields a zero point") {
  ReceiverNetwork net = default_network(TopologyKind::kSeriesConnection);
  net.gaps = {12.0, 12.0, 12.0};
  OperatingPoint pt = solve_operating_point(net, 20.0);
  CHECK(pt.u_out == 0.0);
  CHECK(pt.i_out == 0.0);
  CHECK(pt.i_in == 0.0);

  net.topology = TopologyKind::kParallelWithDiodes;
  pt = solve_operating_point(net, 20.0);
  CHECK(pt.u_out == 0.0);
  CHECK(pt.i_out == 0.0);
}
