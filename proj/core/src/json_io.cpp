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

#include "wptdock/json_io.hpp"

#include <json.hpp>

#include "json_detail.hpp"
#include "json_util.hpp"
#include "wptdock/errors.hpp"

namespace wptdock {

using jsonutil::json;

namespace detail {

json module_to_json(const ModuleSpec& m) {
  return json{{"u_in_nominal", m.u_in_nominal},
              {"u_out_nominal", m.u_out_nominal},
              {"i_out_max", m.i_out_max},
              {"eta_link", m.eta_link},
              {"r_droop", m.r_droop},
              {"p_idle", m.p_idle},
              {"gap_max", m.gap_max},
              {"coil_inner_d", m.coil_inner_d},
              {"coil_outer_d", m.coil_outer_d},
              {"coil_h", m.coil_h}};
}

ModuleSpec module_from_json(const json& j, const ModuleSpec& base,
                            const std::string& path) {
  jsonutil::require_object(j, path.empty() ? "module" : path);
  jsonutil::check_keys(j, path,
                       {"u_in_nominal", "u_out_nominal", "i_out_max",
                        "eta_link", "r_droop", "p_idle", "gap_max",
                        "coil_inner_d", "coil_outer_d", "coil_h"});
  ModuleSpec m = base;
  m.u_in_nominal = jsonutil::get_number(j, "u_in_nominal", m.u_in_nominal, path);
  m.u_out_nominal =
      jsonutil::get_number(j, "u_out_nominal", m.u_out_nominal, path);
  m.i_out_max = jsonutil::get_number(j, "i_out_max", m.i_out_max, path);
  m.eta_link = jsonutil::get_number(j, "eta_link", m.eta_link, path);
  m.r_droop = jsonutil::get_number(j, "r_droop", m.r_droop, path);
  m.p_idle = jsonutil::get_number(j, "p_idle", m.p_idle, path);
  m.gap_max = jsonutil::get_number(j, "gap_max", m.gap_max, path);
  m.coil_inner_d = jsonutil::get_number(j, "coil_inner_d", m.coil_inner_d, path);
  m.coil_outer_d = jsonutil::get_number(j, "coil_outer_d", m.coil_outer_d, path);
  m.coil_h = jsonutil::get_number(j, "coil_h", m.coil_h, path);
  return m;
}

json network_to_json(const ReceiverNetwork& net) {
  json modules = json::array();
  for (const ModuleSpec& m : net.modules) modules.push_back(module_to_json(m));
  return json{{"topology", to_string(net.topology)},
              {"modules", modules},
              {"gaps", net.gaps},
              {"diode",
               {{"v_forward", net.diode.v_forward},
                {"ideal_blocking", net.diode.ideal_blocking}}},
              {"r_bus", net.r_bus}};
}

ReceiverNetwork network_from_json(const json& j, const ModuleSpec& base,
                                  const std::string& path) {
  jsonutil::require_object(j, "network");
  jsonutil::check_keys(j, path,
                       {"topology", "modules", "gaps", "diode", "r_bus"});
  ReceiverNetwork net;
  net.topology = topology_from_string(
      jsonutil::get_string(j, "topology", "series", path));
  if (j.contains("gaps")) {
    const json& g = j.at("gaps");
    if (!g.is_array()) throw ConfigError(path + "gaps must be an array");
    net.gaps.clear();
    for (const auto& v : g) {
      if (!v.is_number()) {
        throw ConfigError(path + "gaps entries must be numbers");
      }
      net.gaps.push_back(v.get<double>());
    }
  }
  if (j.contains("modules")) {
    const json& ms = j.at("modules");
    if (!ms.is_array()) throw ConfigError(path + "modules must be an array");
    std::size_t idx = 0;
    for (const auto& v : ms) {
      net.modules.push_back(module_from_json(
          v, base, path + "modules[" + std::to_string(idx) + "]."));
      ++idx;
    }
  } else {
    std::size_t n = net.gaps.empty() ? 3 : net.gaps.size();
    net.modules.assign(n, base);
  }
  if (net.gaps.empty()) net.gaps.assign(net.modules.size(), 0.0);
  if (j.contains("diode")) {
    const json& d = j.at("diode");
    jsonutil::require_object(d, path + "diode");
    jsonutil::check_keys(d, path + "diode.", {"v_forward", "ideal_blocking"});
    net.diode.v_forward = jsonutil::get_number(d, "v_forward",
                                               net.diode.v_forward,
                                               path + "diode.");
    net.diode.ideal_blocking = jsonutil::get_bool(
        d, "ideal_blocking", net.diode.ideal_blocking, path + "diode.");
  }
  net.r_bus = jsonutil::get_number(j, "r_bus", net.r_bus, path);
  return net;
}

json frustum_to_json(const FrustumSpec& f) {
  return json{{"slope_angle_deg", f.slope_angle_deg},
              {"mu", f.mu},
              {"face_count", f.face_count},
              {"base_size", f.base_size},
              {"height", f.height},
              {"m_etu", f.m_etu},
              {"m_eru", f.m_eru}};
}

FrustumSpec frustum_from_json(const json& j, const std::string& path) {
  jsonutil::require_object(j, "frustum");
  jsonutil::check_keys(j, path,
                       {"slope_angle_deg", "mu", "face_count", "base_size",
                        "height", "m_etu", "m_eru"});
  FrustumSpec f;
  f.slope_angle_deg =
      jsonutil::get_number(j, "slope_angle_deg", f.slope_angle_deg, path);
  f.mu = jsonutil::get_number(j, "mu", f.mu, path);
  f.face_count = jsonutil::get_int(j, "face_count", f.face_count, path);
  f.base_size = jsonutil::get_number(j, "base_size", f.base_size, path);
  f.height = jsonutil::get_number(j, "height", f.height, path);
  f.m_etu = jsonutil::get_number(j, "m_etu", f.m_etu, path);
  f.m_eru = jsonutil::get_number(j, "m_eru", f.m_eru, path);
  return f;
}

}  // namespace detail

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const ModuleSpec& spec) {
  return dump(detail::module_to_json(spec));
}

std::string to_json(const ReceiverNetwork& network) {
  return dump(detail::network_to_json(network));
}

std::string to_json(const FrustumSpec& frustum) {
  return dump(detail::frustum_to_json(frustum));
}

std::string to_json(const ComparisonReport& report) {
  json topologies = json::array();
  for (const TopologySummary& s : report.topologies) {
    json entry{{"topology", to_string(s.topology)},
               {"peak_p_out_w", s.peak_p_out},
               {"eta_at_peak", s.eta_at_peak},
               {"r_load_at_peak_ohm", s.r_load_at_peak},
               {"peak_eta", s.peak_eta},
               {"peak_u_out_v", s.peak_u_out},
               {"droop_ratio", s.droop_ratio}};
    if (s.charge_time_h) entry["charge_time_at_peak_h"] = *s.charge_time_h;
    topologies.push_back(entry);
  }
  json j{{"topologies", topologies}};
  if (report.sc_pc_peak_ratio) j["sc_pc_peak_ratio"] = *report.sc_pc_peak_ratio;
  if (report.sc_pc_diodes_peak_ratio) {
    j["sc_pc_diodes_peak_ratio"] = *report.sc_pc_diodes_peak_ratio;
  }
  return dump(j);
}

std::string to_json(const AlignReport& report) {
  return dump(json{{"alpha_deg", report.alpha_deg},
                   {"mu", report.mu},
                   {"alpha_min_deg", report.alpha_min_deg},
                   {"self_locking_ok", report.self_locking_ok},
                   {"gaps_mm", report.gaps_mm},
                   {"charge_feasible", report.charge_feasible}});
}

ModuleSpec module_spec_from_json(const std::string& text) {
  return detail::module_from_json(jsonutil::parse_document(text),
                                  default_module_spec(), "");
}

ReceiverNetwork network_from_json(const std::string& text) {
  return detail::network_from_json(jsonutil::parse_document(text),
                                   default_module_spec(), "");
}

FrustumSpec frustum_from_json(const std::string& text) {
  return detail::frustum_from_json(jsonutil::parse_document(text), "");
}

}  // namespace wptdock
