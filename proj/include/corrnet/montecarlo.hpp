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

#include "corrnet/mmse.hpp"
#include "corrnet/pointproc.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrnet {

/// Too many consecutive singular covariances for one realization.
class RealizationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxRedraws = 100;

struct StatSummary {
    double mean = 0.0;
    std::optional<double> stddev;  // unbiased; absent for a single sample
    std::size_t count = 0;
    double min = 0.0;
    double max = 0.0;

    /// Standard error of the mean, absent for a single sample.
    std::optional<double> sem() const;
};

/// Throws std::invalid_argument on empty input.
StatSummary summarize(std::span<const double> samples);

/// One realization's outcome: the SIR sample and the window count used for
/// density estimation.
struct RealizationOutcome {
    SirSample sample;
    WindowCount window;
};

/// Full pipeline for one seed: geometry, activation, fading, covariance,
/// MMSE SIR. Singular covariances redraw the whole realization.
RealizationOutcome run_realization(const RealizationGenerator& generator, std::uint64_t seed);
SirSample run_realization(const NetworkConfig& config, std::uint64_t seed);

struct ExperimentSpec {
    std::vector<NetworkConfig> points;  // one network configuration per sweep point
    std::size_t replications = 1;
    std::uint64_t master_seed = 1;
    unsigned threads = 1;
    bool keep_samples = false;          // retain per-replication rates in the report

    void validate() const;
};

struct PointResult {
    NetworkConfig config;
    std::optional<StatSummary> rate;  // absent when the point failed
    std::optional<StatSummary> sir;
    double empirical_density = 0.0;
    double predicted_density = 0.0;
    std::size_t redraws = 0;
    std::optional<double> asymptote;
    std::optional<double> rel_gap;
    bool failed = false;
    std::string failure;
    std::vector<double> rates;  // filled when keep_samples
};

struct ExperimentReport {
    std::vector<PointResult> points;
    std::uint64_t master_seed = 0;
    std::size_t replications = 0;
    double wall_seconds = 0.0;
    std::string code_version;
};

/// Runs every point x replication. Results do not depend on the number of
/// threads: each replication owns its seed and its output slot.
ExperimentReport run_experiment(const ExperimentSpec& spec);

struct DensityEstimate {
    double empirical = 0.0;
    double predicted = 0.0;
    double sigma = 0.0;  // binomial standard error of `empirical`
    std::size_t replications = 0;

    double relative_error() const { return (empirical - predicted) / predicted; }
    bool within(double k_sigma) const { return std::abs(empirical - predicted) <= k_sigma * sigma; }
};

/// Mean windowed active density over replications (geometry only, no
/// fading), against the model's limiting density.
DensityEstimate density_estimate(const NetworkConfig& config, std::size_t replications,
                                 std::uint64_t master_seed, unsigned threads = 1);

/// Runs body(k) for k in [0, count) on `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Library version string recorded in reports.
std::string code_version();

}  // namespace corrnet
