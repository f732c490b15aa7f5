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

#include "corrnet/hex_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace corrnet {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

}  // namespace

HexLattice::HexLattice(double rho_c, int kappa, double extent)
    : rho_c_(rho_c), kappa_(kappa), extent_(extent)
{
    if (!(rho_c > 0.0)) throw std::invalid_argument("hex lattice: rho_c must be positive");
    if (!(extent >= 0.0)) throw std::invalid_argument("hex lattice: extent must be non-negative");
    switch (kappa) {
    case 1: gen_p_ = 1; gen_q_ = 0; break;
    case 3: gen_p_ = 1; gen_q_ = 1; break;
    case 4: gen_p_ = 2; gen_q_ = 0; break;
    case 7: gen_p_ = 2; gen_q_ = 1; break;
    default:
        throw std::invalid_argument("hex lattice: unsupported reuse factor " + std::to_string(kappa)
                                    + " (supported: 1, 3, 4, 7)");
    }
    spacing_ = std::sqrt(2.0 / (kSqrt3 * rho_c));

    // |i a1 + j a2| >= (sqrt(3)/2) d max(|i|, |j|), so this range covers the disk.
    const int reach = static_cast<int>(std::ceil(extent / (0.5 * kSqrt3 * spacing_))) + 1;
    const double extent_sq = extent * extent;
    for (int j = -reach; j <= reach; ++j) {
        for (int i = -reach; i <= reach; ++i) {
            const SiteIndex s{i, j};
            const Point p = position(s);
            if (p.x * p.x + p.y * p.y <= extent_sq) sites_.push_back({s, p, is_band0(s)});
        }
    }
}

double HexLattice::circumradius() const { return spacing_ / kSqrt3; }

Point HexLattice::position(SiteIndex s) const
{
    return {spacing_ * (s.i + 0.5 * s.j), spacing_ * 0.5 * kSqrt3 * s.j};
}

bool HexLattice::is_band0(SiteIndex s) const
{
    // Solve (i, j) = u (p, q) + v (-q, p + q); the determinant is kappa.
    const long long u_num = static_cast<long long>(s.i) * (gen_p_ + gen_q_) + static_cast<long long>(s.j) * gen_q_;
    const long long v_num = static_cast<long long>(s.j) * gen_p_ - static_cast<long long>(s.i) * gen_q_;
    return u_num % kappa_ == 0 && v_num % kappa_ == 0;
}

SiteIndex HexLattice::nearest_site(Point p) const
{
    const double v = p.y / (0.5 * kSqrt3 * spacing_);
    const double u = p.x / spacing_ - 0.5 * v;
    const int i0 = static_cast<int>(std::lround(u));
    const int j0 = static_cast<int>(std::lround(v));

    SiteIndex best{i0, j0};
    double best_d = std::numeric_limits<double>::infinity();
    for (int dj = -2; dj <= 2; ++dj) {
        for (int di = -2; di <= 2; ++di) {
            const SiteIndex s{i0 + di, j0 + dj};
            const double d = distance_squared(p, position(s));
            if (d < best_d || (d == best_d && (s.i < best.i || (s.i == best.i && s.j < best.j)))) {
                best = s;
                best_d = d;
            }
        }
    }
    return best;
}

std::size_t HexLattice::band0_count() const
{
    return static_cast<std::size_t>(
        std::count_if(sites_.begin(), sites_.end(), [](const Site& s) { return s.band0; }));
}

HexLattice hex_lattice_band0(double rho_c, int kappa, double extent)
{
    return HexLattice(rho_c, kappa, extent);
}

double cell_edge_rho_c(double r) { return 2.0 / (3.0 * kSqrt3 * r * r); }

}  // namespace corrnet
