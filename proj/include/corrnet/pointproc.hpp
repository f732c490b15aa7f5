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

#include "corrnet/geometry.hpp"
#include "corrnet/hex_lattice.hpp"
#include "corrnet/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corrnet {

/// Rule g(.) deciding which potential interferers transmit.
enum class ActivationModel { independent, hc1, hc2, cellular, boolean };

std::string_view to_string(ActivationModel model);
/// Throws std::invalid_argument for an unknown name.
ActivationModel parse_activation_model(std::string_view name);

struct ModelParams {
    double h = 0.0;           // hard-core radius (hc1, hc2) or grain radius (boolean)
    double rho_b = 0.0;       // cluster-center density (boolean)
    double rho_c = 0.0;       // base-station density (cellular)
    int kappa = 1;            // reuse factor (cellular)
    bool power_control = false;  // cellular: mobiles transmit r_b^alpha
};

struct NetworkConfig {
    double rho_p = 0.01;  // potential-interferer density
    double alpha = 4.0;   // path-loss exponent
    int N = 1;            // receive diversity branches
    double c = 50.0;      // n / N
    double r_T = 1.0;     // representative link length
    ActivationModel model = ActivationModel::independent;
    ModelParams params;

    /// n = round(c N); equals round(pi rho_p R^2).
    std::size_t potential_count() const;
    /// R = sqrt(c N / (pi rho_p)).
    double radius() const;
    /// Representative transmitter, placed at (r_T, 0).
    Point transmitter() const { return {r_T, 0.0}; }

    /// Throws std::invalid_argument on a hard violation.
    void validate() const;
    /// Soft issues (for instance c * nu <= 1). Empty when none.
    std::vector<std::string> warnings() const;
};

/// One network draw. Per-node vectors all have length n.
struct Realization {
    std::vector<Point> positions;
    std::vector<double> marks;
    std::vector<std::uint8_t> active;
    std::vector<double> power_weight;
    std::vector<double> serving_distance;  // cellular only, empty otherwise
    std::vector<Point> centers;            // boolean only

    std::size_t active_count() const;
};

std::vector<Point> sample_potential_interferers(const NetworkConfig& config, std::uint64_t seed);

/// n points uniform in the disk of radius `radius`, drawn from `engine`.
std::vector<Point> sample_uniform_disk(std::size_t count, double radius, Engine& engine);

/// HC-I: a node transmits unless it lies within h of X_T or of any other node.
std::vector<std::uint8_t> thin_hc1(std::span<const Point> positions, Point tx, double h);

/// HC-II: a node transmits unless it lies within h of X_T or has a
/// lower-marked node within h. Equal marks are ordered by index.
std::vector<std::uint8_t> thin_hc2(std::span<const Point> positions, std::span<const double> marks,
                                   Point tx, double h);

struct CellSchedule {
    std::vector<std::uint8_t> active;
    std::vector<double> serving_distance;  // distance to own base station, every node
};

/// TDMA uplink: in each band-0 cell except the origin cell, the lowest-mark
/// occupant transmits.
CellSchedule schedule_cellular(std::span<const Point> positions, std::span<const double> marks,
                               const HexLattice& lattice, Point tx);

/// Boolean cluster model: a node transmits iff some center lies within h.
std::vector<std::uint8_t> activate_boolean(std::span<const Point> positions,
                                           std::span<const Point> centers, double h);

/// Draws complete realizations for a fixed configuration.
class RealizationGenerator {
public:
    explicit RealizationGenerator(NetworkConfig config);

    const NetworkConfig& config() const { return config_; }
    const std::optional<HexLattice>& lattice() const { return lattice_; }

    /// Deterministic in `seed`.
    Realization draw(std::uint64_t seed) const;

private:
    NetworkConfig config_;
    std::optional<HexLattice> lattice_;
};

/// Active count inside an edge-corrected observation window, with the
/// window's area. Used to estimate the limiting active density.
struct WindowCount {
    double active = 0.0;
    double area = 0.0;
    double trials = 0.0;  // Bernoulli trials behind `active` (nodes, or band-0 cells)
};

/// Counts actives away from the disk boundary and the transmitter's guard
/// zone. For the cellular model counts band-0 cells instead of area; see
/// implementation.
WindowCount window_active_count(const NetworkConfig& config, const Realization& realization,
                                const std::optional<HexLattice>& lattice);

/// Writes x,y,mark,active,power_weight,serving_distance rows.
std::string realization_csv(const Realization& realization);

}  // namespace corrnet
