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

#include "corrnet/report_io.hpp"

#include <span>
#include <string>

namespace corrnet {

/// Line chart of mean rate against N: simulated markers joined by a line,
/// the asymptote as a solid line and the rate standard deviation dashed.
/// One color per series (model + parameters). Throws CsvError on an empty
/// table.
std::string render_rate_plot(std::span<const ReportRow> rows, const std::string& title = "Mean rate vs N");

}  // namespace corrnet
