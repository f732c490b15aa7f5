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

#include "corrnet/asymptotics.hpp"
#include "corrnet/montecarlo.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace corrnet;

namespace {

NetworkConfig config(ActivationModel model, int N, double c = 50.0)
{
    NetworkConfig cfg;
    cfg.rho_p = 0.01;
    cfg.alpha = 4.0;
    cfg.N = N;
    cfg.c = c;
    cfg.r_T = 1.0 / std::sqrt(std::numbers::pi * cfg.rho_p);
    cfg.model = model;
    cfg.params.h = cfg.r_T;
    return cfg;
}

}  // namespace

TEST_CASE("summaries")
{
    const std::vector<double> a{2, 2, 2};
    const auto s = summarize(a);
    CHECK(s.mean == 2.0);
    CHECK(*s.stddev == 0.0);
    CHECK(s.count == 3);
    const std::vector<double> b{1, 3};
    const auto t = summarize(b);
    CHECK(t.mean == 2.0);
    CHECK(*t.stddev == doctest::Approx(std::sqrt(2.0)));
    CHECK(*t.sem() == doctest::Approx(1.0));
    CHECK(t.min == 1.0);
    CHECK(t.max == 3.0);
    const std::vector<double> one{5};
    CHECK_FALSE(summarize(one).stddev.has_value());
    CHECK_FALSE(summarize(one).sem().has_value());
    CHECK_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("realizations are reproducible")
{
    const auto cfg = config(ActivationModel::hc2, 4);
    const auto a = run_realization(cfg, 99);
    const auto b = run_realization(cfg, 99);
    CHECK(a.sir == b.sir);
    CHECK(a.active_count == b.active_count);
    CHECK(run_realization(cfg, 100).sir != a.sir);
}

TEST_CASE("scalar network: N = 1, two active interferers")
{
    auto cfg = config(ActivationModel::independent, 1, 2.0);
    cfg.rho_p = 1.0 / std::numbers::pi;  // n = 2
    const auto s = run_realization(cfg, 5);
    CHECK(s.active_count == 2);
    CHECK(s.redraw_count == 0);
    CHECK(s.sir > 0.0);
}

TEST_CASE("singular draws are redrawn, then reported")
{
    // n = 3 with N = 4 can never be full rank.
    auto cfg = config(ActivationModel::independent, 4, 0.75);
    CHECK_THROWS_AS(run_realization(cfg, 1), RealizationFailed);

    ExperimentSpec spec;
    spec.points = {cfg, config(ActivationModel::independent, 2)};
    spec.replications = 3;
    const auto rep = run_experiment(spec);
    REQUIRE(rep.points.size() == 2);
    CHECK(rep.points[0].failed);
    CHECK_FALSE(rep.points[0].rate.has_value());
    CHECK_FALSE(rep.points[1].failed);
    CHECK(rep.points[1].rate->count == 3);
}

TEST_CASE("experiment aggregation")
{
    ExperimentSpec spec;
    spec.points = {config(ActivationModel::hc1, 2), config(ActivationModel::hc1, 4)};
    spec.replications = 1;
    spec.keep_samples = true;
    const auto one = run_experiment(spec);
    CHECK(one.points[0].rate->mean == one.points[0].rates.at(0));
    CHECK_FALSE(one.points[0].rate->stddev.has_value());

    spec.replications = 40;
    const auto a = run_experiment(spec);
    spec.threads = 3;
    const auto b = run_experiment(spec);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(a.points[k].rates == b.points[k].rates);
        CHECK(a.points[k].rate->mean == b.points[k].rate->mean);
        double sum = 0.0;
        for (double r : a.points[k].rates) sum += r;
        CHECK(a.points[k].rate->mean == doctest::Approx(sum / 40.0).epsilon(1e-14));
        const auto& cfg = spec.points[k];
        CHECK(*a.points[k].asymptote == doctest::Approx(predicted_rate(cfg)));
        CHECK(*a.points[k].rel_gap == doctest::Approx(std::abs(a.points[k].rate->mean - *a.points[k].asymptote) / *a.points[k].asymptote));
        CHECK(a.points[k].redraws == 0);
    }
    spec.replications = 0;
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
}

TEST_CASE("predicted rate by model")
{
    auto cfg = config(ActivationModel::hc1, 8);
    const double rho = 0.01 * std::exp(-1.0);
    CHECK(predicted_rate(cfg) == doctest::Approx(rate_approx(8, rho, 4.0, cfg.r_T)));
    cfg.model = ActivationModel::cellular;
    cfg.params.rho_c = 0.001;
    cfg.params.kappa = 3;
    cfg.params.power_control = true;
    CHECK(predicted_rate(cfg) == doctest::Approx(power_controlled_rate(8, 3, 4.0, 0.01, 0.001)));
}

TEST_CASE("independent density is exact")
{
    const auto cfg = config(ActivationModel::independent, 4);
    const auto est = density_estimate(cfg, 20, 3);
    CHECK(est.empirical == doctest::Approx(0.01).epsilon(0.05));
    CHECK(est.predicted == 0.01);
}

TEST_CASE("parallel_for covers every index once")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) CHECK(h == 1);
}
