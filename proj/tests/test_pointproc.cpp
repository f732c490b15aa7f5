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

#include "corrnet/geometry.hpp"
#include "corrnet/hex_lattice.hpp"
#include "corrnet/pointproc.hpp"
#include "corrnet/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

using namespace corrnet;

namespace {

constexpr double kPi = std::numbers::pi;

NetworkConfig base_config(ActivationModel model)
{
    NetworkConfig cfg;
    cfg.rho_p = 0.01;
    cfg.alpha = 4.0;
    cfg.N = 8;
    cfg.c = 50.0;
    cfg.r_T = 1.0 / std::sqrt(kPi * cfg.rho_p);
    cfg.model = model;
    cfg.params.h = cfg.r_T;
    cfg.params.rho_b = 0.001;
    cfg.params.rho_c = 0.001;
    cfg.params.kappa = 3;
    if (model == ActivationModel::boolean) cfg.params.h = 1.0 / std::sqrt(kPi * cfg.params.rho_b);
    return cfg;
}

// O(n^2) reference for HC-I.
std::vector<std::uint8_t> brute_hc1(const std::vector<Point>& pts, Point tx, double h)
{
    std::vector<std::uint8_t> a(pts.size(), 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (distance(pts[i], tx) < h) a[i] = 0;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i && distance(pts[i], pts[j]) < h) a[i] = 0;
    }
    return a;
}

std::vector<std::uint8_t> brute_hc2(const std::vector<Point>& pts, const std::vector<double>& marks, Point tx, double h)
{
    std::vector<std::uint8_t> a(pts.size(), 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (distance(pts[i], tx) < h) a[i] = 0;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i && distance(pts[i], pts[j]) < h && (marks[j] < marks[i] || (marks[j] == marks[i] && j < i)))
                a[i] = 0;
    }
    return a;
}

}  // namespace

TEST_CASE("neighbor grid matches brute force")
{
    Engine eng(5);
    for (double radius : {0.0001, 0.5, 3.0, 40.0}) {
        const auto pts = sample_uniform_disk(400, 30.0, eng);
        NeighborGrid grid(pts, radius);
        for (std::size_t i = 0; i < pts.size(); i += 7) {
            std::set<std::size_t> got;
            grid.for_each_neighbor(i, [&](std::size_t j) { got.insert(j); });
            std::set<std::size_t> want;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i && distance(pts[i], pts[j]) < radius) want.insert(j);
            CHECK(got == want);
        }
    }
}

TEST_CASE("uniform disk sampling")
{
    Engine eng(17);
    const auto pts = sample_uniform_disk(20000, 10.0, eng);
    std::size_t inner = 0;
    for (const auto& p : pts) {
        CHECK(norm(p) <= 10.0);
        if (norm(p) < 5.0) ++inner;
    }
    // P(r < R/2) = 1/4, binomial sd ~ 0.003
    CHECK(std::abs(static_cast<double>(inner) / pts.size() - 0.25) < 0.015);
}

TEST_CASE("network size follows c and N")
{
    auto cfg = base_config(ActivationModel::independent);
    CHECK(cfg.potential_count() == 400);
    CHECK(cfg.radius() == doctest::Approx(std::sqrt(400 / (kPi * 0.01))));
    cfg.N = 3;
    cfg.c = 2.5;
    CHECK(cfg.potential_count() == 8);  // round(7.5)
    CHECK(sample_potential_interferers(cfg, 1).size() == 8);
}

TEST_CASE("config validation")
{
    auto cfg = base_config(ActivationModel::cellular);
    cfg.params.kappa = 2;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("1, 3, 4, 7"), std::invalid_argument);
    cfg = base_config(ActivationModel::independent);
    cfg.alpha = 2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = base_config(ActivationModel::boolean);
    cfg.params.rho_b = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_THROWS_AS(parse_activation_model("hc3"), std::invalid_argument);
    CHECK(parse_activation_model("hc2") == ActivationModel::hc2);

    cfg = base_config(ActivationModel::cellular);
    cfg.c = 20.0;  // c * nu = 20 / 30 < 1
    CHECK(cfg.warnings().size() == 1);
    cfg.c = 500.0;
    CHECK(cfg.warnings().empty());
}

TEST_CASE("HC-I thinning: fixed example and guard zone")
{
    const Point tx{5.0, 0.0};
    std::vector<Point> pts{{0.0, 0.0}, {0.5, 0.0}, {3.0, 0.0}, {5.5, 0.0}, {-3.0, 0.0}};
    const auto a = thin_hc1(pts, tx, 1.0);
    CHECK(a == std::vector<std::uint8_t>{0, 0, 1, 0, 1});
    // The boundary is strict: distance exactly h does not deactivate.
    std::vector<Point> edge{{0.0, 0.0}, {2.0, 0.0}};
    CHECK(thin_hc1(edge, {100.0, 0.0}, 2.0) == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("HC-II thinning: lowest mark wins, guard nodes still block")
{
    const Point tx{10.0, 0.0};
    std::vector<Point> pts{{0.0, 0.0}, {0.6, 0.0}, {1.2, 0.0}};
    std::vector<double> marks{0.5, 0.1, 0.9};
    // 1 beats both neighbors; 0 and 2 are 1.2 apart, outside h.
    CHECK(thin_hc2(pts, marks, tx, 1.0) == std::vector<std::uint8_t>{0, 1, 0});
    // A node inside the guard zone with the lowest mark still silences its neighbor.
    std::vector<Point> g{{9.5, 0.0}, {8.7, 0.0}};
    CHECK(thin_hc2(g, std::vector<double>{0.1, 0.2}, tx, 1.0) == std::vector<std::uint8_t>{0, 0});
    // Equal marks: the lower index wins.
    CHECK(thin_hc2(pts, std::vector<double>{0.3, 0.3, 0.3}, tx, 1.0) == std::vector<std::uint8_t>{1, 0, 0});
}

TEST_CASE("hard-core thinning matches brute force and keeps the hard core")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto cfg = base_config(ActivationModel::hc1);
        cfg.N = 2;
        cfg.params.h = 2.0 + static_cast<double>(seed % 5);
        RealizationGenerator gen(cfg);
        const auto r = gen.draw(seed);
        const Point tx = cfg.transmitter();
        const auto a1 = thin_hc1(r.positions, tx, cfg.params.h);
        const auto a2 = thin_hc2(r.positions, r.marks, tx, cfg.params.h);
        CHECK(a1 == brute_hc1(r.positions, tx, cfg.params.h));
        CHECK(a2 == brute_hc2(r.positions, r.marks, tx, cfg.params.h));
        for (std::size_t i = 0; i < r.positions.size(); ++i) {
            // HC-II keeps every HC-I survivor.
            if (a1[i]) CHECK(a2[i]);
            if (!a2[i]) continue;
            CHECK(distance(r.positions[i], tx) >= cfg.params.h);
            for (std::size_t j = i + 1; j < r.positions.size(); ++j)
                if (a2[j]) CHECK(distance(r.positions[i], r.positions[j]) >= cfg.params.h);
        }
    }
}

TEST_CASE("hex lattice geometry")
{
    const double rho_c = 0.001;
    HexLattice lat(rho_c, 3, 300.0);
    CHECK(std::sqrt(3.0) / 2.0 * lat.spacing() * lat.spacing() == doctest::Approx(1.0 / rho_c));
    CHECK(lat.circumradius() == doctest::Approx(lat.spacing() / std::sqrt(3.0)));
    CHECK(lat.nearest_site({0.1, -0.2}) == SiteIndex{0, 0});
    CHECK(lat.is_band0({0, 0}));
    CHECK_THROWS_AS(HexLattice(rho_c, 2, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(HexLattice(0.0, 1, 100.0), std::invalid_argument);
    CHECK(cell_edge_rho_c(10.0) == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0) * 100.0)));
    HexLattice edge(cell_edge_rho_c(10.0), 1, 50.0);
    CHECK(edge.circumradius() == doctest::Approx(10.0));

    // Band-0 sites form a 1/kappa share of the lattice, with co-channel spacing sqrt(3 kappa) R_cell.
    for (int kappa : {1, 3, 4, 7}) {
        HexLattice l(rho_c, kappa, 2000.0);
        const double frac = static_cast<double>(l.band0_count()) / l.sites().size();
        CHECK(frac == doctest::Approx(1.0 / kappa).epsilon(0.03));
        double nearest = INFINITY;
        for (const auto& s : l.sites())
            if (s.band0 && !(s.index == SiteIndex{0, 0})) nearest = std::min(nearest, norm(s.position));
        CHECK(nearest == doctest::Approx(std::sqrt(3.0 * kappa) * l.circumradius()).epsilon(1e-9));
    }
}

TEST_CASE("nearest site agrees with exhaustive search")
{
    HexLattice lat(0.002, 4, 200.0);
    Engine eng(99);
    const auto pts = sample_uniform_disk(2000, 150.0, eng);
    for (const auto& p : pts) {
        const SiteIndex s = lat.nearest_site(p);
        double best = INFINITY;
        for (const auto& site : lat.sites()) best = std::min(best, distance(p, site.position));
        CHECK(distance(p, lat.position(s)) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("cellular schedule: one active per band-0 cell, none in the origin cell")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto cfg = base_config(ActivationModel::cellular);
        cfg.c = 500.0;
        cfg.params.kappa = (seed % 2) ? 3 : 7;
        RealizationGenerator gen(cfg);
        const auto r = gen.draw(seed);
        const auto& lat = *gen.lattice();
        std::unordered_map<std::uint64_t, std::size_t> per_cell;
        std::unordered_map<std::uint64_t, double> best_mark;
        for (std::size_t i = 0; i < r.positions.size(); ++i) {
            const SiteIndex s = lat.nearest_site(r.positions[i]);
            CHECK(r.serving_distance[i] == doctest::Approx(distance(r.positions[i], lat.position(s))));
            if (lat.is_band0(s) && !(s == SiteIndex{0, 0})) {
                auto [it, ins] = best_mark.try_emplace(site_key(s), r.marks[i]);
                if (!ins) it->second = std::min(it->second, r.marks[i]);
            }
            if (!r.active[i]) continue;
            CHECK(lat.is_band0(s));
            CHECK_FALSE(s == SiteIndex{0, 0});
            ++per_cell[site_key(s)];
            CHECK(r.power_weight[i] == 1.0);
        }
        for (const auto& [key, count] : per_cell) CHECK(count == 1);
        // Every occupied band-0 cell transmits, using its lowest-mark mobile.
        CHECK(per_cell.size() == best_mark.size());
        for (std::size_t i = 0; i < r.positions.size(); ++i)
            if (r.active[i]) CHECK(r.marks[i] == best_mark[site_key(lat.nearest_site(r.positions[i]))]);
    }
}

TEST_CASE("power control weights")
{
    auto cfg = base_config(ActivationModel::cellular);
    cfg.params.power_control = true;
    cfg.c = 200.0;
    RealizationGenerator gen(cfg);
    const auto r = gen.draw(3);
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
        if (r.active[i]) CHECK(r.power_weight[i] == doctest::Approx(std::pow(r.serving_distance[i], 4.0)));
        else CHECK(r.power_weight[i] == 0.0);
    }
}

TEST_CASE("boolean activation")
{
    std::vector<Point> centers{{0.0, 0.0}, {10.0, 0.0}};
    std::vector<Point> pts{{0.5, 0.0}, {5.0, 0.0}, {10.0, 0.99}, {1.0, 0.0}};
    CHECK(activate_boolean(pts, centers, 1.0) == std::vector<std::uint8_t>{1, 0, 1, 0});
    CHECK(activate_boolean(pts, {}, 1.0) == std::vector<std::uint8_t>{0, 0, 0, 0});

    auto cfg = base_config(ActivationModel::boolean);
    RealizationGenerator gen(cfg);
    const auto r = gen.draw(8);
    CHECK(r.centers.size() == static_cast<std::size_t>(std::llround(kPi * 0.001 * cfg.radius() * cfg.radius())));
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
        bool covered = false;
        for (const auto& c : r.centers) covered = covered || distance(c, r.positions[i]) < cfg.params.h;
        CHECK(static_cast<bool>(r.active[i]) == covered);
    }
}

TEST_CASE("realizations are deterministic in the seed")
{
    for (auto model : {ActivationModel::independent, ActivationModel::hc1, ActivationModel::hc2,
                       ActivationModel::cellular, ActivationModel::boolean}) {
        auto cfg = base_config(model);
        if (model == ActivationModel::cellular) cfg.c = 300.0;
        RealizationGenerator gen(cfg);
        const auto a = gen.draw(123);
        const auto b = gen.draw(123);
        const auto c = gen.draw(124);
        CHECK(a.positions == b.positions);
        CHECK(a.active == b.active);
        CHECK(a.power_weight == b.power_weight);
        CHECK_FALSE(a.positions == c.positions);
        CHECK(realization_csv(a) == realization_csv(b));
        // Positions depend only on the geometry stream, not on the model.
        CHECK(a.positions == sample_potential_interferers(cfg, 123));
    }
}

TEST_CASE("realization CSV")
{
    auto cfg = base_config(ActivationModel::hc1);
    cfg.N = 1;
    cfg.c = 3.0;
    RealizationGenerator gen(cfg);
    const auto csv = realization_csv(gen.draw(1));
    CHECK(csv.rfind("x,y,mark,active,power_weight,serving_distance\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find(",NA\n") != std::string::npos);
}

TEST_CASE("window count edge correction")
{
    auto cfg = base_config(ActivationModel::independent);
    RealizationGenerator gen(cfg);
    const auto r = gen.draw(1);
    const auto w = window_active_count(cfg, r, gen.lattice());
    // h applies to the boundary band as well; the independent config keeps h = r_T.
    const double inner = cfg.radius() - cfg.params.h;
    CHECK(w.area == doctest::Approx(kPi * inner * inner));
    CHECK(w.trials == doctest::Approx(static_cast<double>(cfg.potential_count())));
    std::size_t in = 0;
    for (const auto& p : r.positions) in += norm(p) < inner;
    CHECK(w.active == static_cast<double>(in));
}

TEST_CASE("seed derivation")
{
    std::set<std::uint64_t> seen;
    for (std::uint32_t p = 0; p < 40; ++p)
        for (std::uint32_t r = 0; r < 500; ++r) seen.insert(replication_seed(77, p, r));
    CHECK(seen.size() == 40u * 500u);
    CHECK(derive_seed(1, kGeometryStream) != derive_seed(1, kFadingStream));
    static_assert(mix64(0) != 0);
}
