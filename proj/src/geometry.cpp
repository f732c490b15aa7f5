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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace corrnet {

NeighborGrid::NeighborGrid(std::span<const Point> points, double radius)
    : points_(points), radius_(radius), radius_sq_(radius * radius), cell_side_(radius)
{
    if (!(radius > 0.0)) throw std::invalid_argument("NeighborGrid: radius must be positive");

    double max_x = 0.0;
    double max_y = 0.0;
    if (!points.empty()) {
        min_x_ = max_x = points.front().x;
        min_y_ = max_y = points.front().y;
        for (const Point& p : points) {
            min_x_ = std::min(min_x_, p.x);
            min_y_ = std::min(min_y_, p.y);
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
    }
    const double extent = std::max(max_x - min_x_, max_y - min_y_);
    const double per_axis = std::sqrt(static_cast<double>(points.size())) + 1.0;
    cell_side_ = std::max(radius, extent / per_axis);
    cols_ = static_cast<long>((max_x - min_x_) / cell_side_) + 1;
    rows_ = static_cast<long>((max_y - min_y_) / cell_side_) + 1;

    const auto cells = static_cast<std::size_t>(cols_ * rows_);
    cell_start_.assign(cells + 1, 0);
    std::vector<std::size_t> owner(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        long cx = 0;
        long cy = 0;
        owner[i] = cell_of(points[i], cx, cy);
        ++cell_start_[owner[i] + 1];
    }
    for (std::size_t c = 0; c < cells; ++c) cell_start_[c + 1] += cell_start_[c];
    cell_items_.resize(points.size());
    std::vector<std::size_t> fill(cell_start_.begin(), cell_start_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) cell_items_[fill[owner[i]]++] = i;
}

std::size_t NeighborGrid::cell_of(Point p, long& cx, long& cy) const
{
    cx = std::clamp(static_cast<long>((p.x - min_x_) / cell_side_), 0L, cols_ - 1);
    cy = std::clamp(static_cast<long>((p.y - min_y_) / cell_side_), 0L, rows_ - 1);
    return static_cast<std::size_t>(cy * cols_ + cx);
}

}  // namespace corrnet
