/*
 * Copyright 2026 The corrnet Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

     http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.

*/

#pragma once

#include "corrnet/montecarlo.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace corrnet {

inline constexpr int kRunConfigSchemaVersion = 1;

/// Invalid run configuration. what() carries "origin:line:column: message"
/// when the position is known.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed run configuration (YAML, see configs/README in the repository).
struct RunConfig {
    ExperimentSpec spec;
    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;
};

/// Parses YAML text. `origin` names the source in diagnostics.
RunConfig parse_run_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_run_config(const std::string& path);

}  // namespace corrnet
