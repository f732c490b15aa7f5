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

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace corrnet {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// The interference covariance could not be factored (rank deficient or
/// condition number above kMaxCondition).
class SingularCovariance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kMaxCondition = 1e12;

struct FadingSet {
    CVector g_T;  // representative channel, length N
    CMatrix G;    // N x count, one column per active interferer
};

/// Circularly symmetric complex Gaussian entries, E|g|^2 = 1.
FadingSet draw_fading(int N, std::size_t count, std::uint64_t seed);

/// R = sum_i weights[i] g_i g_i^H, weights[i] = P_i r_i^-alpha.
CMatrix interference_covariance(const CMatrix& G, std::span<const double> weights);

struct SirSample {
    double sir = 0.0;     // linear
    double beta_N = 0.0;  // N^(-alpha/2) r_T^alpha sir
    double rate = 0.0;    // log2(1 + sir), bits/symbol
    std::size_t active_count = 0;
    std::size_t redraw_count = 0;
};

/// Output SIR of the MMSE combiner w = R^-1 g_T:
/// sir = tx_power r_T^-alpha g_T^H R^-1 g_T.
///
/// Solves through a Cholesky factorization of R. Throws SingularCovariance
/// when the factorization fails or R is too ill-conditioned.
SirSample mmse_sir(const CVector& g_T, const CMatrix& R, double r_T, double alpha, int N,
                   double tx_power = 1.0);

/// Smallest eigenvalue of a Hermitian matrix. Throws std::invalid_argument
/// if the input departs from Hermitian by more than 1e-10 (relative to its
/// largest entry).
double min_eigenvalue(const CMatrix& A);

/// Empirical distribution function H_n(x) = #{v <= x} / n.
class EmpiricalCdf {
public:
    /// Throws std::invalid_argument on empty input.
    explicit EmpiricalCdf(std::vector<double> values);

    double operator()(double x) const;
    std::size_t size() const { return sorted_.size(); }
    std::span<const double> sorted_values() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

EmpiricalCdf edf(std::vector<double> values);

/// max over the grid of |edf(x) - reference(x)|.
double ks_distance(const EmpiricalCdf& edf, const std::function<double(double)>& reference,
                   std::span<const double> grid);

/// 512 log-spaced points on [x0/10, 1000 x0].
std::vector<double> edf_comparison_grid(double x0);

}  // namespace corrnet
