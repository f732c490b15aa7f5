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
#include <vector>

namespace corrnet {

/// Fixed header of the simulate table.
inline constexpr const char* kReportCsvHeader =
    "model,N,c,alpha,rho_p,model_params,mean_rate,std_rate,sem,asymptote,rel_gap,"
    "empirical_density,predicted_density,seed";

class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One parsed row. Missing numeric fields ("NA") are empty optionals.
struct ReportRow {
    std::string model;
    int N = 0;
    double c = 0.0;
    double alpha = 0.0;
    double rho_p = 0.0;
    std::string model_params;
    std::optional<double> mean_rate;
    std::optional<double> std_rate;
    std::optional<double> sem;
    std::optional<double> asymptote;
    std::optional<double> rel_gap;
    std::optional<double> empirical_density;
    std::optional<double> predicted_density;
    std::uint64_t seed = 0;

    /// model_params without the N-dependent part; rows sharing it form one curve.
    std::string series_key() const { return model + " " + model_params; }
};

/// "r_T=...;h=..." style description of the model parameters of a point,
/// with ";status=failed" appended for failed points.
std::string model_params_field(const PointResult& point);

/// Serializes the report as CSV with kReportCsvHeader, one row per point.
std::string report_csv(const ExperimentReport& report);

/// Parses CSV produced by report_csv. Throws CsvError on malformed input.
std::vector<ReportRow> parse_report_csv(const std::string& text);

/// Human-readable per-point summary for the terminal.
std::string report_summary(const ExperimentReport& report);

}  // namespace corrnet
