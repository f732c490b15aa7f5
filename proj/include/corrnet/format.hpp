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

#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace corrnet {

/// Nine significant digits, '.' decimal point regardless of locale.
/// Non-finite values render as "NA".
inline std::string format_number(double v)
{
    if (!std::isfinite(v)) return "NA";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

inline std::string format_number(const std::optional<double>& v)
{
    return v ? format_number(*v) : std::string("NA");
}

}  // namespace corrnet
