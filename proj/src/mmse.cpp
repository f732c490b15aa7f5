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

#include "corrnet/mmse.hpp"

#include "corrnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace corrnet {

FadingSet draw_fading(int N, std::size_t count, std::uint64_t seed)
{
    if (N < 1) throw std::invalid_argument("draw_fading: N must be positive");
    Engine engine = make_engine(seed);
    // Real and imaginary parts each carry variance 1/2.
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    auto draw = [&] {
        const double re = normal(engine);
        const double im = normal(engine);
        return std::complex<double>(re, im);
    };

    FadingSet out;
    out.g_T.resize(N);
    for (int k = 0; k < N; ++k) out.g_T(k) = draw();
    out.G.resize(N, static_cast<Eigen::Index>(count));
    for (Eigen::Index col = 0; col < out.G.cols(); ++col)
        for (int k = 0; k < N; ++k) out.G(k, col) = draw();
    return out;
}

CMatrix interference_covariance(const CMatrix& G, std::span<const double> weights)
{
    if (static_cast<std::size_t>(G.cols()) != weights.size())
        throw std::invalid_argument("interference_covariance: one weight per column required");
    CMatrix scaled = G;
    for (Eigen::Index col = 0; col < G.cols(); ++col) {
        const double w = weights[static_cast<std::size_t>(col)];
        if (w < 0.0) throw std::invalid_argument("interference_covariance: negative weight");
        scaled.col(col) *= std::sqrt(w);
    }
    CMatrix R = CMatrix::Zero(G.rows(), G.rows());
    R.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
    R.triangularView<Eigen::StrictlyUpper>() = R.adjoint();
    return R;
}

SirSample mmse_sir(const CVector& g_T, const CMatrix& R, double r_T, double alpha, int N,
                   double tx_power)
{
    if (R.rows() != g_T.size() || R.cols() != g_T.size())
        throw std::invalid_argument("mmse_sir: dimension mismatch");
    Eigen::LLT<CMatrix> llt(R);
    if (llt.info() != Eigen::Success) throw SingularCovariance("interference covariance not positive definite");
    if (llt.rcond() < 1.0 / kMaxCondition) throw SingularCovariance("interference covariance ill-conditioned");

    const CVector w = llt.solve(g_T);
    const std::complex<double> q = g_T.dot(w);  // g_T^H R^-1 g_T
    if (!(q.real() > 0.0)) throw SingularCovariance("non-positive quadratic form");

    SirSample s;
    s.sir = tx_power * std::pow(r_T, -alpha) * q.real();
    s.beta_N = std::pow(static_cast<double>(N), -alpha / 2.0) * std::pow(r_T, alpha) * s.sir;
    s.rate = std::log2(1.0 + s.sir);
    return s;
}

double min_eigenvalue(const CMatrix& A)
{
    if (A.rows() != A.cols()) throw std::invalid_argument("min_eigenvalue: matrix must be square");
    if (A.size() == 0) throw std::invalid_argument("min_eigenvalue: empty matrix");
    const double scale = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
    if ((A - A.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("min_eigenvalue: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(A, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values))
{
    if (sorted_.empty()) throw std::invalid_argument("edf: empty input");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const
{
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf edf(std::vector<double> values) { return EmpiricalCdf(std::move(values)); }

double ks_distance(const EmpiricalCdf& cdf, const std::function<double(double)>& reference,
                   std::span<const double> grid)
{
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(cdf(x) - reference(x)));
    return worst;
}

std::vector<double> edf_comparison_grid(double x0)
{
    constexpr int kPoints = 512;
    std::vector<double> grid(kPoints);
    const double lo = std::log(x0 / 10.0);
    const double hi = std::log(x0 * 1000.0);
    for (int k = 0; k < kPoints; ++k) grid[k] = std::exp(lo + (hi - lo) * k / (kPoints - 1));
    return grid;
}

}  // namespace corrnet
