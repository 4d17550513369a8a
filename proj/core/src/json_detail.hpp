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

// Internal json <-> domain-type converters shared between json_io.cpp and
// config.cpp. Not installed.

#pragma once

#include <string>

#include <json.hpp>

#include "wptdock/model.hpp"

namespace wptdock::detail {

nlohmann::json module_to_json(const ModuleSpec& m);
ModuleSpec module_from_json(const nlohmann::json& j, const ModuleSpec& base,
                            const std::string& path);
nlohmann::json network_to_json(const ReceiverNetwork& net);
ReceiverNetwork network_from_json(const nlohmann::json& j,
                                  const ModuleSpec& base,
                                  const std::string& path);
nlohmann::json frustum_to_json(const FrustumSpec& f);
FrustumSpec frustum_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace wptdock::detail
