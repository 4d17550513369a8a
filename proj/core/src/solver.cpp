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

#include "wptdock/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "wptdock/errors.hpp"

// Both topologies reduce to one scalar piecewise-linear equation.
//
// Series: the chain voltage sum(max(0, V_m - R_m*i)) is non-increasing in
// the chain current i, the load demand (r_load + r_bus)*i is increasing, so
// the crossing is unique. Kinks sit where a module's terminal clamps to
// zero; each segment solves in closed form.
//
// Parallel: the supply curve S(u) = sum of branch currents at bus voltage u
// is non-increasing in u (with vertical segments for zero-droop branches),
// the demand u/(r_load + r_bus) is increasing, so again a unique crossing.
// Kinks sit where a branch enters constant-current mode or where a diode
// stops conducting. The scan walks segments in ascending u and checks each
// breakpoint's vertical range, which is exactly an active-set iteration over
// discrete regimes.

namespace wptdock {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_solvable(const ReceiverNetwork& network, double r_load,
                      const SolverConfig& config) {
  ValidationReport report = validate(network);
  if (!report.empty()) {
    throw InvalidNetwork("invalid network: " + format_report(report));
  }
  if (!std::isfinite(r_load) || r_load <= 0) {
    throw DegenerateInput("r_load must be positive and finite");
  }
  if (!(config.residual_tol > 0) || config.max_iterations < 1) {
    throw DegenerateInput("solver config invalid");
  }
}

bool module_live(const ReceiverNetwork& net, std::size_t k) {
  return net.gaps[k] <= net.modules[k].gap_max;
}

void attach_input_power(const ReceiverNetwork& net, OperatingPoint& pt) {
  InputPower in = input_power(net, pt);
  pt.u_in = net.modules.front().u_in_nominal;
  pt.i_in = in.i_in;
}

void check_residual(const OperatingPoint& pt, const SolverConfig& cfg,
                    double source_u, double load_u, double condition) {
  // Ohm's law at the load: the source-side voltage prediction (chain sum or
  // bus node minus the r_bus drop) must match i_out * r_load. `condition`
  // carries the cancellation magnitude of the current computation (terms of
  // (u_oc - u)/r scaled by r_load); low-droop branches driving large loads
  // legitimately lose that many digits, which is backward error in the specs,
  // not a wrong regime.
  double scale = std::max({1.0, std::abs(source_u), std::abs(load_u)});
  double allowed = cfg.residual_tol * scale + 1e-13 * condition;
  if (std::abs(source_u - load_u) > allowed) {
    throw NonConvergence("operating-point residual above tolerance",
                         pt.r_load);
  }
}

OperatingPoint solve_series(const ReceiverNetwork& net, double r_load,
                            const SolverConfig& cfg) {
  const std::size_t n = net.modules.size();
  OperatingPoint pt;
  pt.r_load = r_load;
  pt.per_module_i.assign(n, 0.0);
  pt.per_module_u.assign(n, 0.0);

  double i_limit = kInf;
  double v_total = 0.0;
  std::vector<double> clamp_points;  // currents where a terminal hits zero
  bool any_live = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!module_live(net, k)) continue;  // dead module: zero-volt pass-through
    any_live = true;
    const ModuleSpec& m = net.modules[k];
    v_total += m.u_out_nominal;
    i_limit = std::min(i_limit, m.i_out_max);
    if (m.r_droop > 0) clamp_points.push_back(m.u_out_nominal / m.r_droop);
  }

  double i_star = 0.0;
  if (any_live && v_total > 0) {
    std::sort(clamp_points.begin(), clamp_points.end());
    clamp_points.erase(
        std::unique(clamp_points.begin(), clamp_points.end()),
        clamp_points.end());
    if (static_cast<int>(clamp_points.size()) + 1 > cfg.max_iterations) {
      throw NonConvergence("regime count exceeds max_iterations", r_load);
    }
    double seg_lo = 0.0;
    for (std::size_t s = 0; s <= clamp_points.size(); ++s) {
      double seg_hi = s < clamp_points.size() ? clamp_points[s] : kInf;
      // Membership is probed strictly inside the segment; probing an
      // endpoint that coincides with a module's own clamp point is
      // ill-conditioned (V - R*(V/R) rounds either way).
      double probe =
          std::isinf(seg_hi) ? seg_lo + 1.0 : 0.5 * (seg_lo + seg_hi);
      double a = 0.0, b = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (!module_live(net, k)) continue;
        const ModuleSpec& m = net.modules[k];
        if (m.r_droop == 0.0 || m.u_out_nominal - m.r_droop * probe > 0) {
          a += m.u_out_nominal;
          b += m.r_droop;
        }
      }
      double cand = a / (b + r_load + net.r_bus);
      if (cand <= seg_hi || s == clamp_points.size()) {
        i_star = cand;
        break;
      }
      seg_lo = seg_hi;
    }
  }

  pt.current_limited = i_star > i_limit;
  const double i = pt.current_limited ? i_limit : i_star;
  pt.i_out = i;
  std::fill(pt.per_module_i.begin(), pt.per_module_i.end(), i);

  double chain_u = 0.0;
  if (!pt.current_limited) {
    for (std::size_t k = 0; k < n; ++k) {
      pt.per_module_u[k] =
          module_terminal_voltage(net.modules[k], i, net.gaps[k]);
      chain_u += pt.per_module_u[k];
    }
    chain_u -= net.r_bus * i;
    // Source-side voltage; keeps ideal-network values exact. The residual
    // check below compares it against the load law.
    pt.u_out = chain_u < 0 ? 0.0 : chain_u;
  } else {
    // The chain carries the limit current; regulated terminal voltages sum
    // to more than the load demands, so the constrained modules shed the
    // surplus. Allocating proportionally keeps every terminal in
    // [0, regulated value] and the sum exact.
    double regulated_sum = 0.0;
    std::vector<double> regulated(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      regulated[k] = module_terminal_voltage(net.modules[k], i, net.gaps[k]);
      regulated_sum += regulated[k];
    }
    double required = i * (r_load + net.r_bus);
    double scale = regulated_sum > 0 ? required / regulated_sum : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      pt.per_module_u[k] = regulated[k] * scale;
      chain_u += pt.per_module_u[k];
    }
    chain_u -= net.r_bus * i;
    pt.u_out = i * r_load;  // constant-current region: the load dictates
  }

  attach_input_power(net, pt);
  check_residual(pt, cfg, chain_u, i * r_load, 0.0);
  return pt;
}

// One parallel branch seen from the output bus node.
struct Branch {
  double u_oc = 0.0;    // bus voltage at zero branch current (V - v_forward)
  double r = 0.0;       // droop resistance
  double i_max = 0.0;
  double v_nom = 0.0;
  bool live = false;
  bool has_diode = false;
};

// Equal-share allocation of total current T among branches pinned on a
// vertical segment, respecting per-branch bounds. Deterministic: bounds are
// applied in index order, shares recomputed among the rest. clamped_hi, when
// given, marks entries that had to be fixed at their upper bound.
std::vector<double> waterfill(double total, const std::vector<double>& lo,
                              const std::vector<double>& hi,
                              std::vector<bool>* clamped_hi = nullptr) {
  const std::size_t n = lo.size();
  std::vector<double> out(n, 0.0);
  std::vector<bool> fixed(n, false);
  if (clamped_hi) clamped_hi->assign(n, false);
  double remaining = total;
  std::size_t free_count = n;
  for (std::size_t pass = 0; pass <= n && free_count > 0; ++pass) {
    double share = remaining / static_cast<double>(free_count);
    bool changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (fixed[k]) continue;
      if (share > hi[k]) {
        out[k] = hi[k];
        fixed[k] = true;
        if (clamped_hi) (*clamped_hi)[k] = true;
        remaining -= hi[k];
        --free_count;
        changed = true;
      } else if (share < lo[k]) {
        out[k] = lo[k];
        fixed[k] = true;
        remaining -= lo[k];
        --free_count;
        changed = true;
      }
    }
    if (!changed) {
      share = remaining / static_cast<double>(free_count);
      for (std::size_t k = 0; k < n; ++k) {
        if (!fixed[k]) out[k] = share;
      }
      return out;
    }
  }
  return out;
}

OperatingPoint solve_parallel(const ReceiverNetwork& net, double r_load,
                              const SolverConfig& cfg) {
  const std::size_t n = net.modules.size();
  const bool with_diodes =
      net.topology == TopologyKind::kParallelWithDiodes;
  const double v_f = with_diodes ? net.diode.v_forward : 0.0;
  const double r_out = r_load + net.r_bus;

  std::vector<Branch> br(n);
  std::vector<double> breakpoints;
  for (std::size_t k = 0; k < n; ++k) {
    Branch& b = br[k];
    b.live = module_live(net, k);
    if (!b.live) continue;
    const ModuleSpec& m = net.modules[k];
    b.v_nom = m.u_out_nominal;
    b.u_oc = m.u_out_nominal - v_f;
    b.r = m.r_droop;
    b.i_max = m.i_out_max;
    b.has_diode = with_diodes;
    if (b.u_oc > 0) breakpoints.push_back(b.u_oc);
    if (b.r > 0) {
      double u_cc = b.u_oc - b.r * b.i_max;  // below this the limit binds
      if (u_cc > 0) breakpoints.push_back(u_cc);
    }
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  // Branch current at bus voltage u, on a segment whose interior contains
  // probe (verticals excluded; those are resolved at breakpoints).
  auto segment_current = [&](const Branch& b, double probe) -> double {
    if (!b.live) return 0.0;
    if (b.r == 0.0) {
      // Zero-droop source: full limit below u_oc. Above u_oc a diode blocks;
      // without a diode the crossing can never sit there (unbounded
      // back-feed), so the scan stops at the vertical first.
      return probe < b.u_oc ? b.i_max : 0.0;
    }
    double i = (b.u_oc - probe) / b.r;
    if (i > b.i_max) return b.i_max;
    if (b.has_diode && i < 0) return 0.0;
    return i;
  };

  if (static_cast<int>(breakpoints.size()) + 1 > cfg.max_iterations) {
    throw NonConvergence("regime count exceeds max_iterations", r_load);
  }

  double u_star = 0.0;
  std::vector<int> vertical;  // branch indices pinned at the accepted breakpoint
  bool accepted = false;
  double seg_lo = 0.0;
  const double slack = 1e-12;
  for (std::size_t s = 0; s <= breakpoints.size() && !accepted; ++s) {
    double seg_hi = s < breakpoints.size() ? breakpoints[s] : kInf;
    double probe = std::isinf(seg_hi) ? seg_lo + 1.0 : 0.5 * (seg_lo + seg_hi);
    // Affine supply on this segment: S(u) = a - b*u.
    double a = 0.0, b = 0.0;
    for (const Branch& br_k : br) {
      if (!br_k.live) continue;
      if (br_k.r == 0.0) {
        if (probe < br_k.u_oc) a += br_k.i_max;
        continue;
      }
      double i = (br_k.u_oc - probe) / br_k.r;
      if (i > br_k.i_max) {
        a += br_k.i_max;
      } else if (br_k.has_diode && i < 0) {
        // blocked: contributes nothing
      } else {
        a += br_k.u_oc / br_k.r;
        b += 1.0 / br_k.r;
      }
    }
    double cand = a / (b + 1.0 / r_out);
    if (cand >= seg_lo - slack * std::max(1.0, seg_lo) &&
        (cand <= seg_hi || std::isinf(seg_hi))) {
      u_star = std::max(cand, 0.0);
      accepted = true;
      break;
    }
    // Interior crossing rejected; test the vertical range at seg_hi.
    if (!std::isinf(seg_hi)) {
      double demand = seg_hi / r_out;
      double s_hi = 0.0, s_lo_sum = 0.0;
      bool unbounded_below = false;
      for (const Branch& br_k : br) {
        if (!br_k.live) continue;
        if (br_k.r == 0.0 && br_k.u_oc == seg_hi) {
          s_hi += br_k.i_max;
          if (br_k.has_diode) {
            // lower end 0
          } else {
            unbounded_below = true;
          }
        } else {
          double i = segment_current(br_k, seg_hi);
          s_hi += i;
          s_lo_sum += i;
        }
      }
      double tol = cfg.residual_tol * std::max(1.0, std::abs(demand));
      if (demand <= s_hi + tol &&
          (unbounded_below || demand >= s_lo_sum - tol)) {
        u_star = seg_hi;
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k].live && br[k].r == 0.0 && br[k].u_oc == seg_hi) {
            vertical.push_back(static_cast<int>(k));
          }
        }
        accepted = true;
        break;
      }
    }
    seg_lo = seg_hi;
  }
  if (!accepted) {
    throw NonConvergence("no bus-voltage crossing found", r_load);
  }

  OperatingPoint pt;
  pt.r_load = r_load;
  pt.per_module_i.assign(n, 0.0);
  pt.per_module_u.assign(n, 0.0);
  if (with_diodes) pt.diode_states.assign(n, false);

  std::vector<bool> capped(n, false);
  double fixed_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Branch& b = br[k];
    if (!b.live) continue;
    if (std::find(vertical.begin(), vertical.end(), static_cast<int>(k)) !=
        vertical.end()) {
      continue;  // allocated below
    }
    double i;
    if (b.r == 0.0) {
      i = u_star < b.u_oc ? b.i_max : 0.0;
      capped[k] = u_star < b.u_oc;
    } else {
      double raw = (b.u_oc - u_star) / b.r;
      i = raw;
      if (raw > b.i_max) {
        i = b.i_max;
        capped[k] = true;
      } else if (b.has_diode && raw < 0) {
        i = 0.0;
      }
    }
    pt.per_module_i[k] = i;
    fixed_sum += i;
  }

  if (!vertical.empty()) {
    double total = u_star / r_out - fixed_sum;
    std::vector<double> lo, hi;
    for (int k : vertical) {
      lo.push_back(br[static_cast<std::size_t>(k)].has_diode ? 0.0 : -kInf);
      hi.push_back(br[static_cast<std::size_t>(k)].i_max);
    }
    std::vector<bool> clamped;
    std::vector<double> shares = waterfill(total, lo, hi, &clamped);
    for (std::size_t j = 0; j < vertical.size(); ++j) {
      std::size_t k = static_cast<std::size_t>(vertical[j]);
      pt.per_module_i[k] = shares[j];
      capped[k] = clamped[j];
    }
  }

  double i_out = 0.0;
  double condition = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    i_out += pt.per_module_i[k];
    const Branch& b = br[k];
    if (b.live && b.r > 0 && !capped[k] && pt.per_module_i[k] != 0.0) {
      condition += (std::abs(b.u_oc) + std::abs(u_star)) / b.r;
    }
  }
  condition *= r_load;
  pt.i_out = i_out;
  double node_u = u_star - net.r_bus * i_out;
  pt.u_out = node_u < 0 ? 0.0 : node_u;  // source-side, exact for ideal nets
  pt.current_limited = std::any_of(capped.begin(), capped.end(),
                                   [](bool c) { return c; });

  for (std::size_t k = 0; k < n; ++k) {
    const Branch& b = br[k];
    if (!b.live) {
      pt.per_module_u[k] = 0.0;
      continue;
    }
    double i = pt.per_module_i[k];
    if (capped[k]) {
      // Constant-current mode: the converter drops its terminal to the bus
      // (plus the diode drop when one is in the path).
      pt.per_module_u[k] = u_star + (b.has_diode ? v_f : 0.0);
    } else {
      pt.per_module_u[k] = b.v_nom - b.r * i;  // regulated or open terminal
    }
    if (with_diodes) {
      pt.diode_states[k] = i > 0 || u_star <= b.u_oc;
    }
  }

  attach_input_power(net, pt);
  check_residual(pt, cfg, u_star - net.r_bus * i_out, i_out * r_load,
                 condition);
  return pt;
}

}  // namespace

double module_terminal_voltage(const ModuleSpec& spec, double i,
                               double gap_mm) {
  if (gap_mm > spec.gap_max) return 0.0;
  return std::max(0.0, spec.u_out_nominal - spec.r_droop * i);
}

OperatingPoint solve_operating_point(const ReceiverNetwork& network,
                                     double r_load,
                                     const SolverConfig& config) {
  require_solvable(network, r_load, config);
  if (network.topology == TopologyKind::kSeriesConnection) {
    return solve_series(network, r_load, config);
  }
  return solve_parallel(network, r_load, config);
}

InputPower input_power(const ReceiverNetwork& network,
                       const OperatingPoint& point) {
  double p_in = 0.0;
  for (std::size_t k = 0; k < network.modules.size(); ++k) {
    if (!module_live(network, k)) continue;  // uncoupled pair is off
    const ModuleSpec& m = network.modules[k];
    double p_m = point.per_module_u[k] * point.per_module_i[k];
    // A back-fed branch dissipates in the module; nothing returns through
    // the magnetic link.
    if (p_m < 0) p_m = 0.0;
    p_in += p_m / m.eta_link + m.p_idle;
  }
  double u_in = network.modules.front().u_in_nominal;
  return {p_in, u_in > 0 ? p_in / u_in : 0.0};
}

OperatingPoint diode_state_oracle(const ReceiverNetwork& network,
                                  double r_load,
                                  const SolverConfig& config) {
  require_solvable(network, r_load, config);
  if (network.topology != TopologyKind::kParallelWithDiodes) {
    throw DegenerateInput(
        "diode_state_oracle requires the parallel_with_diodes topology");
  }
  const std::size_t n = network.modules.size();
  if (n > 10) {
    throw DegenerateInput("diode_state_oracle supports at most 10 modules");
  }
  const double v_f = network.diode.v_forward;
  const double r_out = r_load + network.r_bus;

  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < n; ++k) {
    if (module_live(network, k)) live.push_back(k);
  }
  const std::size_t L = live.size();

  // Conducting subsets ordered by descending size (prefer more conducting
  // diodes), then ascending mask for determinism.
  std::vector<std::uint32_t> conducting_masks;
  for (std::uint32_t m = 0; m < (1u << L); ++m) conducting_masks.push_back(m);
  std::stable_sort(conducting_masks.begin(), conducting_masks.end(),
                   [](std::uint32_t x, std::uint32_t y) {
                     int px = std::popcount(x), py = std::popcount(y);
                     if (px != py) return px > py;
                     return x < y;
                   });

  const double i_tol = config.residual_tol * 10.0;
  const double u_tol = config.residual_tol * 10.0;

  for (std::uint32_t cmask : conducting_masks) {
    // Within a conducting set, enumerate which branches sit at their current
    // limit, fewest-limited first (the regulated regime is preferred at
    // boundaries, matching the clamp rule).
    std::vector<std::uint32_t> limit_masks;
    for (std::uint32_t sm = cmask;; sm = (sm - 1) & cmask) {
      limit_masks.push_back(sm);
      if (sm == 0) break;
    }
    std::stable_sort(limit_masks.begin(), limit_masks.end(),
                     [](std::uint32_t x, std::uint32_t y) {
                       int px = std::popcount(x), py = std::popcount(y);
                       if (px != py) return px < py;
                       return x < y;
                     });

    for (std::uint32_t lmask : limit_masks) {
      // Solve the linear sub-network for this assignment.
      double const_current = 0.0;   // limited branches
      double g_sum = 0.0;           // sum 1/r over regulated branches
      double gu_sum = 0.0;          // sum u_oc/r over regulated branches
      bool pinned = false;
      double pinned_u = 0.0;
      bool inconsistent = false;
      for (std::size_t j = 0; j < L; ++j) {
        if (!(cmask & (1u << j))) continue;
        const ModuleSpec& m = network.modules[live[j]];
        double u_oc = m.u_out_nominal - v_f;
        if (lmask & (1u << j)) {
          const_current += m.i_out_max;
        } else if (m.r_droop > 0) {
          g_sum += 1.0 / m.r_droop;
          gu_sum += u_oc / m.r_droop;
        } else {
          // Zero-droop regulated branch pins the bus at its open voltage.
          if (pinned && pinned_u != u_oc) inconsistent = true;
          pinned = true;
          pinned_u = u_oc;
        }
      }
      if (inconsistent) continue;

      double u;
      if (pinned) {
        u = pinned_u;
      } else {
        u = (gu_sum + const_current) / (g_sum + 1.0 / r_out);
      }
      if (!(u >= -u_tol)) continue;

      // Consistency of every branch with the proposed bus voltage.
      bool ok = true;
      std::vector<double> currents(n, 0.0);
      double assigned = 0.0;
      std::vector<std::size_t> free_branches;  // pinned, current found later
      for (std::size_t j = 0; j < L && ok; ++j) {
        std::size_t k = live[j];
        const ModuleSpec& m = network.modules[k];
        double u_oc = m.u_out_nominal - v_f;
        if (!(cmask & (1u << j))) {
          // Blocking: forward bias must not exceed the threshold.
          if (m.u_out_nominal - u > v_f + u_tol) ok = false;
          continue;
        }
        if (lmask & (1u << j)) {
          // Limited: the source must have headroom to push at least i_max.
          if (m.r_droop > 0) {
            if ((u_oc - u) / m.r_droop < m.i_out_max - i_tol) ok = false;
          } else {
            if (u > u_oc + u_tol) ok = false;
          }
          currents[k] = m.i_out_max;
          assigned += m.i_out_max;
        } else if (m.r_droop > 0) {
          double i = (u_oc - u) / m.r_droop;
          if (i < -i_tol || i > m.i_out_max + i_tol) ok = false;
          currents[k] = i;
          assigned += i;
        } else {
          free_branches.push_back(k);
        }
      }
      if (!ok) continue;

      double demand = u / r_out;
      if (free_branches.empty()) {
        if (pinned) continue;  // unreachable; pinned implies free branches
        // KCL already encoded in the linear solve; nothing more to check.
      } else {
        double rest = demand - assigned;
        double cap = 0.0;
        for (std::size_t k : free_branches) cap += network.modules[k].i_out_max;
        if (rest < -i_tol || rest > cap + i_tol) continue;
        // Equal shares, clamped per branch in index order.
        std::vector<double> lo(free_branches.size(), 0.0);
        std::vector<double> hi;
        for (std::size_t k : free_branches) {
          hi.push_back(network.modules[k].i_out_max);
        }
        std::vector<double> shares = waterfill(rest, lo, hi);
        for (std::size_t j = 0; j < free_branches.size(); ++j) {
          currents[free_branches[j]] = shares[j];
          assigned += shares[j];
        }
      }

      OperatingPoint pt;
      pt.r_load = r_load;
      pt.per_module_i = currents;
      pt.per_module_u.assign(n, 0.0);
      pt.diode_states.assign(n, false);
      double i_out = 0.0;
      for (std::size_t k = 0; k < n; ++k) i_out += currents[k];
      pt.i_out = i_out;
      // Source-side output voltage, matching solve_operating_point's
      // convention.
      double node_u = u - network.r_bus * i_out;
      pt.u_out = node_u < 0 ? 0.0 : node_u;
      bool limited = false;
      for (std::size_t j = 0; j < L; ++j) {
        std::size_t k = live[j];
        const ModuleSpec& m = network.modules[k];
        bool conducting = (cmask & (1u << j)) != 0;
        pt.diode_states[k] = conducting;
        if (!conducting) {
          pt.per_module_u[k] = m.u_out_nominal;
          continue;
        }
        if (lmask & (1u << j)) {
          pt.per_module_u[k] = u + v_f;
          limited = true;
        } else {
          pt.per_module_u[k] = m.u_out_nominal - m.r_droop * currents[k];
        }
      }
      pt.current_limited = limited;
      attach_input_power(network, pt);
      return pt;
    }
  }
  throw NoConsistentState(
      "no diode conduction state satisfies complementarity");
}

}  // namespace wptdock
