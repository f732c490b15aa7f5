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

#include "corrnet/montecarlo.hpp"

#include "corrnet/asymptotics.hpp"
#include "corrnet/rng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

namespace corrnet {

namespace {

constexpr std::uint64_t kRedrawStreamBase = 0x100;

std::uint64_t attempt_seed(std::uint64_t seed, std::size_t attempt)
{
    return attempt == 0 ? seed : derive_seed(seed, kRedrawStreamBase + attempt);
}

}  // namespace

std::optional<double> StatSummary::sem() const
{
    if (!stddev) return std::nullopt;
    return *stddev / std::sqrt(static_cast<double>(count));
}

StatSummary summarize(std::span<const double> samples)
{
    if (samples.empty()) throw std::invalid_argument("summarize: no samples");
    StatSummary s;
    s.count = samples.size();
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.count);
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    s.min = *lo;
    s.max = *hi;
    if (s.count > 1) {
        double ss = 0.0;
        for (double v : samples) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(s.count - 1));
    }
    return s;
}

RealizationOutcome run_realization(const RealizationGenerator& generator, std::uint64_t seed)
{
    const NetworkConfig& cfg = generator.config();
    const bool pc = cfg.model == ActivationModel::cellular && cfg.params.power_control;
    // Under power control the representative also inverts its own path loss.
    const double tx_power = pc ? std::pow(cfg.r_T, cfg.alpha) : 1.0;

    for (std::size_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const std::uint64_t s = attempt_seed(seed, attempt);
        const Realization real = generator.draw(s);

        std::vector<double> weights;
        weights.reserve(real.positions.size());
        for (std::size_t i = 0; i < real.positions.size(); ++i) {
            if (!real.active[i]) continue;
            weights.push_back(real.power_weight[i] * std::pow(norm(real.positions[i]), -cfg.alpha));
        }
        if (weights.size() < static_cast<std::size_t>(cfg.N)) continue;  // rank deficient

        const FadingSet fading = draw_fading(cfg.N, weights.size(), derive_seed(s, kFadingStream));
        const CMatrix R = interference_covariance(fading.G, weights);
        try {
            RealizationOutcome out;
            out.sample = mmse_sir(fading.g_T, R, cfg.r_T, cfg.alpha, cfg.N, tx_power);
            out.sample.active_count = weights.size();
            out.sample.redraw_count = attempt;
            out.window = window_active_count(cfg, real, generator.lattice());
            return out;
        } catch (const SingularCovariance&) {
            // redraw
        }
    }
    throw RealizationFailed("realization failed: " + std::to_string(kMaxRedraws)
                            + " consecutive singular covariances (c*nu too close to 1?)");
}

SirSample run_realization(const NetworkConfig& config, std::uint64_t seed)
{
    return run_realization(RealizationGenerator(config), seed).sample;
}

void ExperimentSpec::validate() const
{
    if (points.empty()) throw std::invalid_argument("experiment: empty sweep");
    if (replications < 1) throw std::invalid_argument("experiment: replications must be at least 1");
    if (points.size() > 0xffffffffULL || replications > 0xffffffffULL)
        throw std::invalid_argument("experiment: too many points or replications");
    for (const auto& p : points) p.validate();
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < count && !failed; k = next++) {
                    try {
                        body(k);
                    } catch (...) {
                        if (!failed.exchange(true)) error = std::current_exception();
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

ExperimentReport run_experiment(const ExperimentSpec& spec)
{
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<RealizationGenerator> generators;
    generators.reserve(spec.points.size());
    for (const auto& p : spec.points) generators.emplace_back(p);

    const std::size_t reps = spec.replications;
    std::vector<std::optional<RealizationOutcome>> outcomes(spec.points.size() * reps);
    std::vector<std::string> errors(outcomes.size());

    parallel_for(outcomes.size(), spec.threads, [&](std::size_t k) {
        const std::size_t point = k / reps;
        const std::size_t rep = k % reps;
        const auto seed = replication_seed(spec.master_seed, static_cast<std::uint32_t>(point),
                                           static_cast<std::uint32_t>(rep));
        try {
            outcomes[k] = run_realization(generators[point], seed);
        } catch (const RealizationFailed& e) {
            errors[k] = e.what();
        }
    });

    ExperimentReport report;
    report.master_seed = spec.master_seed;
    report.replications = reps;
    report.code_version = code_version();
    for (std::size_t point = 0; point < spec.points.size(); ++point) {
        PointResult res;
        res.config = spec.points[point];
        res.predicted_density = limiting_density(res.config.model, res.config.params, res.config.rho_p);
        res.asymptote = predicted_rate(res.config);

        std::vector<double> rates;
        std::vector<double> sirs;
        double active = 0.0;
        double area = 0.0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const std::size_t k = point * reps + rep;
            if (!outcomes[k]) {
                res.failed = true;
                if (res.failure.empty()) res.failure = errors[k];
                continue;
            }
            rates.push_back(outcomes[k]->sample.rate);
            sirs.push_back(outcomes[k]->sample.sir);
            res.redraws += outcomes[k]->sample.redraw_count;
            active += outcomes[k]->window.active;
            area += outcomes[k]->window.area;
        }
        if (!res.failed) {
            res.rate = summarize(rates);
            res.sir = summarize(sirs);
            res.empirical_density = area > 0.0 ? active / area : 0.0;
            res.rel_gap = std::abs(res.rate->mean - *res.asymptote) / *res.asymptote;
        }
        if (spec.keep_samples) res.rates = std::move(rates);
        report.points.push_back(std::move(res));
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

DensityEstimate density_estimate(const NetworkConfig& config, std::size_t replications,
                                 std::uint64_t master_seed, unsigned threads)
{
    if (replications < 1) throw std::invalid_argument("density_estimate: replications must be at least 1");
    const RealizationGenerator generator(config);
    std::vector<WindowCount> counts(replications);
    parallel_for(replications, threads, [&](std::size_t k) {
        const auto seed = replication_seed(master_seed, 0, static_cast<std::uint32_t>(k));
        counts[k] = window_active_count(config, generator.draw(seed), generator.lattice());
    });

    DensityEstimate est;
    est.replications = replications;
    est.predicted = limiting_density(config.model, config.params, config.rho_p);
    double active = 0.0;
    double area = 0.0;
    double variance = 0.0;
    for (const auto& w : counts) {
        active += w.active;
        area += w.area;
        if (w.trials > 0.0) {
            const double p = std::clamp(est.predicted * w.area / w.trials, 0.0, 1.0);
            variance += w.trials * p * (1.0 - p);
        }
    }
    est.empirical = active / area;
    est.sigma = std::sqrt(variance) / area;
    return est;
}

std::string code_version() { return "corrnet 1.0.0"; }

}  // namespace corrnet
