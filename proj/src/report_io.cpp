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

#include "corrnet/report_io.hpp"

#include "corrnet/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace corrnet {

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

template <typename T>
T parse_value(const std::string& field, const std::string& column, std::size_t line)
{
    T value{};
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw CsvError("line " + std::to_string(line) + ": invalid " + column + " '" + field + "'");
    return value;
}

std::optional<double> parse_optional(const std::string& field, const std::string& column, std::size_t line)
{
    if (field == "NA") return std::nullopt;
    return parse_value<double>(field, column, line);
}

}  // namespace

std::string model_params_field(const PointResult& point)
{
    const auto& cfg = point.config;
    const auto& mp = cfg.params;
    std::string s = "r_T=" + format_number(cfg.r_T);
    switch (cfg.model) {
    case ActivationModel::independent: break;
    case ActivationModel::hc1:
    case ActivationModel::hc2: s += ";h=" + format_number(mp.h); break;
    case ActivationModel::cellular:
        s += ";rho_c=" + format_number(mp.rho_c) + ";kappa=" + std::to_string(mp.kappa)
             + ";power_control=" + (mp.power_control ? "1" : "0");
        break;
    case ActivationModel::boolean: s += ";h=" + format_number(mp.h) + ";rho_b=" + format_number(mp.rho_b); break;
    }
    if (point.failed) s += ";status=failed";
    return s;
}

std::string report_csv(const ExperimentReport& report)
{
    std::ostringstream os;
    os << kReportCsvHeader << '\n';
    for (const auto& p : report.points) {
        const auto& cfg = p.config;
        std::optional<double> mean, sd, sem;
        if (p.rate) {
            mean = p.rate->mean;
            sd = p.rate->stddev;
            sem = p.rate->sem();
        }
        os << to_string(cfg.model) << ',' << cfg.N << ',' << format_number(cfg.c) << ','
           << format_number(cfg.alpha) << ',' << format_number(cfg.rho_p) << ',' << model_params_field(p) << ','
           << format_number(mean) << ',' << format_number(sd) << ',' << format_number(sem) << ','
           << format_number(p.asymptote) << ',' << format_number(p.rel_gap) << ','
           << (p.failed ? std::string("NA") : format_number(p.empirical_density)) << ','
           << format_number(p.predicted_density) << ',' << report.master_seed << '\n';
    }
    return os.str();
}

std::vector<ReportRow> parse_report_csv(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw CsvError("empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kReportCsvHeader) throw CsvError("line 1: unexpected header");

    std::vector<ReportRow> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 14)
            throw CsvError("line " + std::to_string(lineno) + ": expected 14 fields, got " + std::to_string(f.size()));
        ReportRow r;
        r.model = f[0];
        r.N = parse_value<int>(f[1], "N", lineno);
        r.c = parse_value<double>(f[2], "c", lineno);
        r.alpha = parse_value<double>(f[3], "alpha", lineno);
        r.rho_p = parse_value<double>(f[4], "rho_p", lineno);
        r.model_params = f[5];
        r.mean_rate = parse_optional(f[6], "mean_rate", lineno);
        r.std_rate = parse_optional(f[7], "std_rate", lineno);
        r.sem = parse_optional(f[8], "sem", lineno);
        r.asymptote = parse_optional(f[9], "asymptote", lineno);
        r.rel_gap = parse_optional(f[10], "rel_gap", lineno);
        r.empirical_density = parse_optional(f[11], "empirical_density", lineno);
        r.predicted_density = parse_optional(f[12], "predicted_density", lineno);
        r.seed = parse_value<std::uint64_t>(f[13], "seed", lineno);
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

std::string brief(std::optional<double> v)
{
    if (!v || !std::isfinite(*v)) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", *v);
    return buf;
}

}  // namespace

std::string report_summary(const ExperimentReport& report)
{
    std::ostringstream os;
    os << "# " << report.code_version << "  master_seed=" << report.master_seed
       << "  replications=" << report.replications << "  wall=" << std::fixed << std::setprecision(2)
       << report.wall_seconds << "s\n";
    os << std::left << std::setw(12) << "model" << std::setw(5) << "N" << std::setw(53) << "params"
       << std::setw(12) << "mean_rate" << std::setw(12) << "std_rate" << std::setw(12) << "asymptote"
       << std::setw(10) << "rel_gap" << "redraws\n";
    for (const auto& p : report.points) {
        os << std::left << std::setw(12) << to_string(p.config.model) << std::setw(5) << p.config.N
           << std::setw(52) << model_params_field(p) << ' ';
        if (p.failed) {
            os << "FAILED: " << p.failure << '\n';
            continue;
        }
        os << std::setw(12) << brief(p.rate->mean) << std::setw(12) << brief(p.rate->stddev) << std::setw(12)
           << brief(p.asymptote) << std::setw(10) << brief(p.rel_gap) << p.redraws << '\n';
    }
    return os.str();
}

}  // namespace corrnet
