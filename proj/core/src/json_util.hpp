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

// Internal strict-parsing helpers. Not installed.

#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "wptdock/errors.hpp"

namespace wptdock::jsonutil {

using nlohmann::json;

inline json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ConfigError("malformed JSON document");
  return j;
}

inline void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + " must be a JSON object");
}

// Fail fast on typos: every key must be in the allowed set.
inline void check_keys(const json& j, const std::string& path,
                       std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown key \"" + path + item.key() + "\"");
  }
}

inline double get_number(const json& j, const char* key, double fallback,
                         const std::string& path) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(path + key + " must be a number");
  return v.get<double>();
}

inline int get_int(const json& j, const char* key, int fallback,
                   const std::string& path) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(path + key + " must be an integer");
  }
  return v.get<int>();
}

inline bool get_bool(const json& j, const char* key, bool fallback,
                     const std::string& path) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_boolean()) throw ConfigError(path + key + " must be a boolean");
  return v.get<bool>();
}

inline std::string get_string(const json& j, const char* key,
                              const std::string& fallback,
                              const std::string& path) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_string()) throw ConfigError(path + key + " must be a string");
  return v.get<std::string>();
}

}  // namespace wptdock::jsonutil
