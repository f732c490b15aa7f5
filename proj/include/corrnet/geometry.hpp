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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace corrnet {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline double distance_squared(Point a, Point b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(Point a, Point b) { return std::sqrt(distance_squared(a, b)); }

/// Uniform bucket grid over a point set for fixed-radius neighbor queries.
///
/// Cell side is at least the query radius, so every neighbor within the
/// radius lies in the 3x3 block of cells around the query point. For tiny
/// radii the side is widened so the grid holds O(n) cells.
class NeighborGrid {
public:
    NeighborGrid(std::span<const Point> points, double radius);

    /// Calls visit(j) for every stored index j != i with |p_j - p_i| < radius.
    template <typename Visitor>
    void for_each_neighbor(std::size_t i, Visitor&& visit) const;

private:
    std::size_t cell_of(Point p, long& cx, long& cy) const;

    std::span<const Point> points_;
    double radius_;
    double radius_sq_;
    double cell_side_;
    double min_x_ = 0.0;
    double min_y_ = 0.0;
    long cols_ = 1;
    long rows_ = 1;
    std::vector<std::size_t> cell_start_;  // CSR offsets, size cols*rows+1
    std::vector<std::size_t> cell_items_;
};

template <typename Visitor>
void NeighborGrid::for_each_neighbor(std::size_t i, Visitor&& visit) const
{
    const Point p = points_[i];
    long cx = 0;
    long cy = 0;
    cell_of(p, cx, cy);
    for (long gy = cy - 1; gy <= cy + 1; ++gy) {
        if (gy < 0 || gy >= rows_) continue;
        for (long gx = cx - 1; gx <= cx + 1; ++gx) {
            if (gx < 0 || gx >= cols_) continue;
            const auto cell = static_cast<std::size_t>(gy * cols_ + gx);
            for (std::size_t k = cell_start_[cell]; k < cell_start_[cell + 1]; ++k) {
                const std::size_t j = cell_items_[k];
                if (j != i && distance_squared(p, points_[j]) < radius_sq_) visit(j);
            }
        }
    }
}

}  // namespace corrnet
