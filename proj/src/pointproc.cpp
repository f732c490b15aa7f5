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

#include "corrnet/pointproc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "corrnet/format.hpp"

namespace corrnet {

namespace {

constexpr double kPi = std::numbers::pi;

// Area of the intersection of disks with radii a and b whose centers are d apart.
double disk_intersection_area(double a, double b, double d)
{
    if (d >= a + b) return 0.0;
    if (d <= std::abs(a - b)) {
        const double r = std::min(a, b);
        return kPi * r * r;
    }
    const double ca = std::clamp((d * d + a * a - b * b) / (2.0 * d * a), -1.0, 1.0);
    const double cb = std::clamp((d * d + b * b - a * a) / (2.0 * d * b), -1.0, 1.0);
    const double k = (-d + a + b) * (d + a - b) * (d - a + b) * (d + a + b);
    return a * a * std::acos(ca) + b * b * std::acos(cb) - 0.5 * std::sqrt(std::max(k, 0.0));
}

bool is_hard_core(ActivationModel m)
{
    return m == ActivationModel::hc1 || m == ActivationModel::hc2;
}

std::vector<double> sample_marks(std::size_t count, Engine& engine)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> marks(count);
    for (double& m : marks) m = unit(engine);
    return marks;
}

// Expected fraction of nodes that transmit in the infinite network, used only
// for the soft c*nu check.
double nominal_activation(const NetworkConfig& cfg)
{
    const auto& mp = cfg.params;
    switch (cfg.model) {
    case ActivationModel::independent: return 1.0;
    case ActivationModel::hc1: return std::exp(-cfg.rho_p * kPi * mp.h * mp.h);
    case ActivationModel::hc2: {
        const double x = cfg.rho_p * kPi * mp.h * mp.h;
        return x > 0.0 ? -std::expm1(-x) / x : 1.0;
    }
    case ActivationModel::cellular:
        return mp.rho_c / (mp.kappa * cfg.rho_p) * -std::expm1(-cfg.rho_p / mp.rho_c);
    case ActivationModel::boolean: return -std::expm1(-mp.rho_b * kPi * mp.h * mp.h);
    }
    return 1.0;
}

}  // namespace

std::string_view to_string(ActivationModel model)
{
    switch (model) {
    case ActivationModel::independent: return "independent";
    case ActivationModel::hc1: return "hc1";
    case ActivationModel::hc2: return "hc2";
    case ActivationModel::cellular: return "cellular";
    case ActivationModel::boolean: return "boolean";
    }
    return "unknown";
}

ActivationModel parse_activation_model(std::string_view name)
{
    for (auto m : {ActivationModel::independent, ActivationModel::hc1, ActivationModel::hc2,
                   ActivationModel::cellular, ActivationModel::boolean}) {
        if (to_string(m) == name) return m;
    }
    throw std::invalid_argument("unknown activation model '" + std::string(name)
                                + "' (expected independent, hc1, hc2, cellular or boolean)");
}

std::size_t NetworkConfig::potential_count() const
{
    return static_cast<std::size_t>(std::llround(c * N));
}

double NetworkConfig::radius() const { return std::sqrt(c * N / (kPi * rho_p)); }

void NetworkConfig::validate() const
{
    auto fail = [](const std::string& what) { throw std::invalid_argument("network config: " + what); };
    if (!(rho_p > 0.0)) fail("rho_p must be positive");
    if (!(alpha > 2.0)) fail("alpha must exceed 2");
    if (N < 1) fail("N must be at least 1");
    if (!(c > 0.0)) fail("c must be positive");
    if (!(r_T > 0.0)) fail("r_T must be positive");
    if (potential_count() < 1) fail("c * N must round to at least one potential interferer");
    const auto& mp = params;
    if (!(mp.h >= 0.0)) fail("h must be non-negative");
    if (model == ActivationModel::boolean && !(mp.rho_b > 0.0)) fail("boolean model needs rho_b > 0");
    if (model == ActivationModel::cellular) {
        if (!(mp.rho_c > 0.0)) fail("cellular model needs rho_c > 0");
        if (std::find(HexLattice::kSupportedReuse.begin(), HexLattice::kSupportedReuse.end(), mp.kappa)
            == HexLattice::kSupportedReuse.end())
            fail("unsupported kappa " + std::to_string(mp.kappa) + " (supported: 1, 3, 4, 7)");
    }
}

std::vector<std::string> NetworkConfig::warnings() const
{
    std::vector<std::string> out;
    const double cnu = c * nominal_activation(*this);
    if (!(cnu > 1.0)) {
        std::ostringstream os;
        os << "c*nu = " << cnu << " <= 1: fewer active interferers than diversity branches";
        out.push_back(os.str());
    }
    return out;
}

std::size_t Realization::active_count() const
{
    return static_cast<std::size_t>(std::count(active.begin(), active.end(), std::uint8_t{1}));
}

std::vector<Point> sample_uniform_disk(std::size_t count, double radius, Engine& engine)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts(count);
    for (Point& p : pts) {
        const double r = radius * std::sqrt(unit(engine));
        const double theta = 2.0 * kPi * unit(engine);
        p = {r * std::cos(theta), r * std::sin(theta)};
    }
    return pts;
}

std::vector<Point> sample_potential_interferers(const NetworkConfig& config, std::uint64_t seed)
{
    Engine engine = make_engine(derive_seed(seed, kGeometryStream));
    return sample_uniform_disk(config.potential_count(), config.radius(), engine);
}

std::vector<std::uint8_t> thin_hc1(std::span<const Point> positions, Point tx, double h)
{
    std::vector<std::uint8_t> active(positions.size(), 1);
    if (!(h > 0.0)) return active;
    const double h_sq = h * h;
    NeighborGrid grid(positions, h);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (distance_squared(positions[i], tx) < h_sq) {
            active[i] = 0;
            continue;
        }
        grid.for_each_neighbor(i, [&](std::size_t) { active[i] = 0; });
    }
    return active;
}

std::vector<std::uint8_t> thin_hc2(std::span<const Point> positions, std::span<const double> marks,
                                   Point tx, double h)
{
    if (marks.size() != positions.size()) throw std::invalid_argument("thin_hc2: marks/positions size mismatch");
    std::vector<std::uint8_t> active(positions.size(), 1);
    if (!(h > 0.0)) return active;
    const double h_sq = h * h;
    NeighborGrid grid(positions, h);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (distance_squared(positions[i], tx) < h_sq) {
            active[i] = 0;
            continue;
        }
        grid.for_each_neighbor(i, [&](std::size_t j) {
            if (marks[j] < marks[i] || (marks[j] == marks[i] && j < i)) active[i] = 0;
        });
    }
    return active;
}

CellSchedule schedule_cellular(std::span<const Point> positions, std::span<const double> marks,
                               const HexLattice& lattice, Point /*tx*/)
{
    if (marks.size() != positions.size())
        throw std::invalid_argument("schedule_cellular: marks/positions size mismatch");
    CellSchedule out;
    out.active.assign(positions.size(), 0);
    out.serving_distance.resize(positions.size());

    // Winner (lowest mark, then lowest index) per band-0 cell.
    std::unordered_map<std::uint64_t, std::size_t> winner;
    const SiteIndex origin{0, 0};
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const SiteIndex s = lattice.nearest_site(positions[i]);
        out.serving_distance[i] = distance(positions[i], lattice.position(s));
        // The representative transmitter holds the origin cell's slot.
        if (s == origin || !lattice.is_band0(s)) continue;
        auto [it, inserted] = winner.try_emplace(site_key(s), i);
        if (!inserted && marks[i] < marks[it->second]) it->second = i;
    }
    for (const auto& [key, i] : winner) out.active[i] = 1;
    return out;
}

std::vector<std::uint8_t> activate_boolean(std::span<const Point> positions,
                                           std::span<const Point> centers, double h)
{
    std::vector<std::uint8_t> active(positions.size(), 0);
    if (!(h > 0.0) || centers.empty()) return active;

    // Index the centers and query each node against them.
    std::vector<Point> merged(centers.begin(), centers.end());
    merged.insert(merged.end(), positions.begin(), positions.end());
    NeighborGrid grid(merged, h);
    const std::size_t m = centers.size();
    for (std::size_t k = 0; k < positions.size(); ++k) {
        grid.for_each_neighbor(m + k, [&](std::size_t j) {
            if (j < m) active[k] = 1;
        });
    }
    return active;
}

RealizationGenerator::RealizationGenerator(NetworkConfig config) : config_(std::move(config))
{
    config_.validate();
    if (config_.model == ActivationModel::cellular) {
        // Every in-disk mobile must find its true nearest site in the lattice.
        const double spacing = std::sqrt(2.0 / (std::numbers::sqrt3 * config_.params.rho_c));
        lattice_.emplace(config_.params.rho_c, config_.params.kappa, config_.radius() + 3.0 * spacing);
    }
}

Realization RealizationGenerator::draw(std::uint64_t seed) const
{
    const NetworkConfig& cfg = config_;
    Engine engine = make_engine(derive_seed(seed, kGeometryStream));

    Realization out;
    const std::size_t n = cfg.potential_count();
    out.positions = sample_uniform_disk(n, cfg.radius(), engine);
    out.marks = sample_marks(n, engine);
    const Point tx = cfg.transmitter();

    switch (cfg.model) {
    case ActivationModel::independent: out.active.assign(n, 1); break;
    case ActivationModel::hc1: out.active = thin_hc1(out.positions, tx, cfg.params.h); break;
    case ActivationModel::hc2: out.active = thin_hc2(out.positions, out.marks, tx, cfg.params.h); break;
    case ActivationModel::cellular: {
        auto sched = schedule_cellular(out.positions, out.marks, *lattice_, tx);
        out.active = std::move(sched.active);
        out.serving_distance = std::move(sched.serving_distance);
        break;
    }
    case ActivationModel::boolean: {
        const double r = cfg.radius();
        const auto m = static_cast<std::size_t>(std::llround(kPi * cfg.params.rho_b * r * r));
        out.centers = sample_uniform_disk(m, r, engine);
        out.active = activate_boolean(out.positions, out.centers, cfg.params.h);
        break;
    }
    }

    out.power_weight.assign(n, 0.0);
    const bool pc = cfg.model == ActivationModel::cellular && cfg.params.power_control;
    for (std::size_t i = 0; i < n; ++i) {
        if (!out.active[i]) continue;
        out.power_weight[i] = pc ? std::pow(out.serving_distance[i], cfg.alpha) : 1.0;
    }
    return out;
}

WindowCount window_active_count(const NetworkConfig& config, const Realization& realization,
                                const std::optional<HexLattice>& lattice)
{
    WindowCount out;
    const double radius = config.radius();

    if (config.model == ActivationModel::cellular) {
        if (!lattice) throw std::invalid_argument("window_active_count: cellular model needs a lattice");
        // Band-0 cells lying wholly inside the disk, origin cell excluded.
        // Each such cell contributes one Bernoulli trial (occupied or not)
        // and kappa / rho_c of area.
        const double inner = radius - lattice->circumradius();
        std::unordered_map<std::uint64_t, bool> counted;
        for (const auto& site : lattice->sites()) {
            if (!site.band0 || site.index == SiteIndex{0, 0}) continue;
            if (norm(site.position) <= inner) counted.emplace(site_key(site.index), false);
        }
        for (std::size_t i = 0; i < realization.positions.size(); ++i) {
            if (!realization.active[i]) continue;
            auto it = counted.find(site_key(lattice->nearest_site(realization.positions[i])));
            if (it != counted.end()) it->second = true;
        }
        for (const auto& [key, occupied] : counted) out.active += occupied ? 1.0 : 0.0;
        out.trials = static_cast<double>(counted.size());
        out.area = out.trials * lattice->kappa() / lattice->rho_c();
        return out;
    }

    // Nodes within the interaction range of the boundary, or of X_T, see a
    // different neighborhood than in the infinite network; leave them out.
    const double range = config.params.h;
    const double inner = std::max(radius - range, 0.0);
    const Point tx = config.transmitter();
    const bool guard = is_hard_core(config.model) && range > 0.0;
    const double inner_sq = inner * inner;
    const double range_sq = range * range;
    for (std::size_t i = 0; i < realization.positions.size(); ++i) {
        const Point p = realization.positions[i];
        if (p.x * p.x + p.y * p.y >= inner_sq) continue;
        if (guard && distance_squared(p, tx) < range_sq) continue;
        out.active += realization.active[i] ? 1.0 : 0.0;
    }
    out.area = kPi * inner_sq;
    if (guard) out.area -= disk_intersection_area(inner, range, config.r_T);
    out.trials = static_cast<double>(realization.positions.size());
    return out;
}

std::string realization_csv(const Realization& r)
{
    std::ostringstream os;
    os << "x,y,mark,active,power_weight,serving_distance\n";
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
        os << format_number(r.positions[i].x) << ',' << format_number(r.positions[i].y) << ','
           << format_number(r.marks[i]) << ',' << static_cast<int>(r.active[i]) << ','
           << format_number(r.power_weight[i]) << ','
           << (r.serving_distance.empty() ? std::string("NA") : format_number(r.serving_distance[i]))
           << '\n';
    }
    return os.str();
}

}  // namespace corrnet
