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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace corrnet {

/// Integer coordinates of a lattice site: position = i*a1 + j*a2 with
/// a1 = d(1, 0), a2 = d(1/2, sqrt(3)/2).
struct SiteIndex {
    int i = 0;
    int j = 0;

    friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
};

/// Hexagonal base-station lattice with frequency reuse.
///
/// Band 0 is the index-kappa sublattice generated by (p, q) with
/// p^2 + pq + q^2 = kappa, anchored at the origin.
class HexLattice {
public:
    struct Site {
        SiteIndex index;
        Point position;
        bool band0 = false;
    };

    static constexpr std::array<int, 4> kSupportedReuse{1, 3, 4, 7};

    /// Throws std::invalid_argument for rho_c <= 0, extent < 0 or an
    /// unsupported kappa.
    HexLattice(double rho_c, int kappa, double extent);

    double rho_c() const { return rho_c_; }
    int kappa() const { return kappa_; }
    double extent() const { return extent_; }
    /// Nearest-neighbor site spacing d, with (sqrt(3)/2) d^2 = 1/rho_c.
    double spacing() const { return spacing_; }
    /// Distance from a site to the corners of its hexagonal cell, d/sqrt(3).
    double circumradius() const;

    Point position(SiteIndex s) const;
    bool is_band0(SiteIndex s) const;
    /// Exact nearest site (ties resolved toward the lexicographically
    /// smallest index).
    SiteIndex nearest_site(Point p) const;

    /// All sites with |position| <= extent.
    const std::vector<Site>& sites() const { return sites_; }
    std::size_t band0_count() const;

private:
    double rho_c_;
    int kappa_;
    double extent_;
    double spacing_;
    int gen_p_ = 1;
    int gen_q_ = 0;
    std::vector<Site> sites_;
};

/// Generates the lattice with the supported validations.
HexLattice hex_lattice_band0(double rho_c, int kappa, double extent);

/// rho_c placing the cell corner at distance r: 2 / (3 sqrt(3) r^2).
double cell_edge_rho_c(double r);

/// Packs a site index into a hashable key.
inline std::uint64_t site_key(SiteIndex s)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.i)) << 32)
           | static_cast<std::uint32_t>(s.j);
}

}  // namespace corrnet
