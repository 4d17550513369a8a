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

#include "wptdock/align.hpp"
#include "wptdock/model.hpp"
#include "wptdock/sweep.hpp"

// JSON (de)serialization for the domain types and reports. Field names match
// the struct members one to one; parsing rejects unknown keys. All output is
// byte-deterministic (sorted keys, shortest round-trip number formatting).

namespace wptdock {

std::string to_json(const ModuleSpec& spec);
std::string to_json(const ReceiverNetwork& network);
std::string to_json(const FrustumSpec& frustum);
std::string to_json(const ComparisonReport& report);
std::string to_json(const AlignReport& report);

// Throw ConfigError on malformed documents, wrong types or unknown keys.
// Missing keys fall back to the respective defaults.
ModuleSpec module_spec_from_json(const std::string& text);
ReceiverNetwork network_from_json(const std::string& text);
FrustumSpec frustum_from_json(const std::string& text);

}  // namespace wptdock
