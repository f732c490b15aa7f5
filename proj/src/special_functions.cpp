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

#include "corrnet/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace corrnet {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

bool is_integer(double x) { return x == std::nearbyint(x); }

// 1 / Gamma(x), zero at the poles.
double reciprocal_gamma(double x)
{
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

double series_2f1(double a, double b, double c, double z)
{
    constexpr int kMaxTerms = 200000;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0 || std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw DomainError("gauss_2f1: power series did not converge");
}

double gauss_sum_at_one(double a, double b, double c)
{
    const double s = c - a - b;
    if (!(s > 0.0)) throw DomainError("gauss_2f1: divergent at z = 1 (c - a - b <= 0)");
    return std::tgamma(c) * std::tgamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z)
{
    if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
    if (z > 1.0) throw DomainError("gauss_2f1: z > 1 is outside the supported range");
    if (z == 1.0) return gauss_sum_at_one(a, b, c);
    if (std::abs(z) <= 0.5) return series_2f1(a, b, c, z);

    if (z < -0.5) {
        // Pfaff: maps z to z/(z-1) in (1/3, 1).
        return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0));
    }

    // z in (1/2, 1).
    const double s = c - a - b;
    if (is_integer(s)) {
        // Logarithmic case of the connection formula; the direct series still
        // converges for z < 1, just slowly.
        return series_2f1(a, b, c, z);
    }
    const double w = 1.0 - z;
    const double first = std::tgamma(c) * std::tgamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b)
                         * series_2f1(a, b, 1.0 - s, w);
    const double second = std::pow(w, s) * std::tgamma(c) * std::tgamma(-s) * reciprocal_gamma(a)
                          * reciprocal_gamma(b) * series_2f1(c - a, c - b, 1.0 + s, w);
    return first + second;
}

double lambert_w0(double z)
{
    constexpr double kBranch = -1.0 / std::numbers::e;
    if (std::isnan(z) || z < kBranch) throw DomainError("lambert_w0: argument below -1/e");
    if (z == kBranch) return -1.0;
    if (z == 0.0) return 0.0;
    if (std::isinf(z)) return z;

    double w;
    if (z < -0.25) {
        // Expansion about the branch point.
        const double p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (z < 3.0) {
        w = std::log1p(z) * (1.0 - std::log1p(std::log1p(z)) / (2.0 + std::log1p(z)));
    } else {
        const double l1 = std::log(z);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int iter = 0; iter < 100; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace corrnet
