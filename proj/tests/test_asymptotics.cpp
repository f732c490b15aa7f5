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

#include "corrnet/asymptotics.hpp"
#include "corrnet/hex_lattice.hpp"
#include "corrnet/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace corrnet;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

AsymptoticParams params(double alpha, double nu, double c, double rho_p = 0.01)
{
    AsymptoticParams p;
    p.alpha = alpha;
    p.nu = nu;
    p.c = c;
    p.rho_p = rho_p;
    return p;
}

}  // namespace

TEST_CASE("large-c beta closed form")
{
    CHECK(beta_large_c(0.01, 4.0) == doctest::Approx(410.63929018737341).epsilon(1e-13));
    // beta ~ rho^{-alpha/2}
    for (double alpha : {2.5, 3.0, 4.0, 6.0})
        CHECK(beta_large_c(0.02, alpha) * std::pow(2.0, alpha / 2.0) == doctest::Approx(beta_large_c(0.01, alpha)).epsilon(1e-13));
}

TEST_CASE("fixed point reference values")
{
    // Reference values from a 30-digit quadrature of the integral fixed point.
    struct Case { double alpha, nu, c, beta; };
    const Case cases[] = {
        {4.0, 1.0, 50.0, 417.43398040415076},
        {2.5, 0.3, 5.0, 418.48989824460045},
        {6.0, 0.6, 500.0, 84451.382958128445},
        {3.0, 1.0, 5.0, 77.68346021034981},
        {4.0, 1.0 / 30.0, 500.0, 388711.88719557551},
    };
    for (const auto& k : cases) {
        INFO("alpha=" << k.alpha << " nu=" << k.nu << " c=" << k.c);
        const auto p = params(k.alpha, k.nu, k.c);
        CHECK(rel_err(solve_beta_fixed_point(p).beta, k.beta) < 1e-9);
        CHECK(rel_err(fixed_point_oracle(p).beta, k.beta) < 1e-9);
    }
}

TEST_CASE("solver and quadrature oracle agree over the grid")
{
    for (double alpha : {2.5, 3.0, 4.0, 6.0})
        for (double nu : {0.3, 0.6, 1.0})
            for (double c : {5.0, 50.0, 500.0}) {
                INFO("alpha=" << alpha << " nu=" << nu << " c=" << c);
                const auto p = params(alpha, nu, c);
                const auto sol = solve_beta_fixed_point(p);
                const auto oracle = fixed_point_oracle(p);
                CHECK(sol.method == SolutionMethod::fixed_point);
                CHECK(oracle.method == SolutionMethod::quadrature_oracle);
                CHECK(sol.beta > 0.0);
                CHECK(sol.residual < 1e-10);
                CHECK(rel_err(sol.beta, oracle.beta) < 1e-6);
                // The correction term is positive, so the finite-c solution lies above the large-c value.
                CHECK(sol.beta > beta_large_c(p.rho(), alpha));
            }
}

TEST_CASE("fixed point approaches the large-c limit")
{
    for (double alpha : {3.0, 4.0, 6.0})
        CHECK(rel_err(solve_beta_fixed_point(params(alpha, 1.0, 1e6)).beta, beta_large_c(0.01, alpha)) < 5e-3);
    // Near alpha = 2 the tail correction decays like c^(1 - alpha/2): still 2.6% at c = 1e6.
    CHECK(rel_err(solve_beta_fixed_point(params(2.5, 1.0, 1e6)).beta, 12.622066382163193) < 1e-9);
    for (double alpha : {2.5, 3.0, 4.0, 6.0}) {
        double prev = INFINITY;
        for (double c : {5.0, 50.0, 500.0, 5000.0}) {
            const double b = solve_beta_fixed_point(params(alpha, 1.0, c)).beta;
            CHECK(b < prev);
            prev = b;
        }
    }
}

TEST_CASE("fixed point is unique on a wide scan")
{
    for (double alpha : {2.5, 4.0, 6.0})
        for (double c : {2.0, 50.0}) {
            const auto p = params(alpha, 1.0, c);
            const double b = beta_large_c(p.rho(), alpha);
            CHECK(count_sign_changes(p, b * 1e-4, b * 1e4, 64) == 1);
        }
}

TEST_CASE("oracle gamma decreases with active density")
{
    for (double alpha : {2.5, 4.0}) {
        double prev = INFINITY;
        for (int k = 2; k <= 20; ++k) {
            const double g = fixed_point_oracle(params(alpha, 0.05 * k, 50.0)).beta;
            CHECK(g < prev);
            prev = g;
        }
    }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(solve_beta_fixed_point(params(4.0, 0.01, 50.0)), std::invalid_argument);  // c*nu = 0.5
    CHECK_THROWS_AS(solve_beta_fixed_point(params(2.0, 1.0, 50.0)), std::invalid_argument);
    CHECK_THROWS_AS(solve_beta_fixed_point(params(4.0, 1.5, 50.0)), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_oracle(params(4.0, 0.0, 50.0)), std::invalid_argument);
}

TEST_CASE("rate approximation")
{
    CHECK(rate_approx(8, 0.01, 4.0, 1.0 / std::sqrt(kPi * 0.01)) == doctest::Approx(4.7515827810366181).epsilon(1e-13));
    for (double alpha : {2.5, 4.0}) {
        const double r_T = 3.0;
        const double direct = std::log2(1.0 + std::pow(8.0, alpha / 2) * std::pow(r_T, -alpha) * beta_large_c(0.004, alpha));
        CHECK(rate_approx(8, 0.004, alpha, r_T) == doctest::Approx(direct).epsilon(1e-13));
        // depends on N / rho only
        CHECK(rate_approx(16, 0.008, alpha, r_T) == doctest::Approx(rate_approx(8, 0.004, alpha, r_T)).epsilon(1e-13));
    }
}

TEST_CASE("cell-edge rates")
{
    const double N = 8, kappa = 3, alpha = 4, rho_p = 0.01, rho_c = 0.001;
    const double plain = cell_edge_rate(N, kappa, alpha, rho_p, rho_c, false);
    const double pc = cell_edge_rate(N, kappa, alpha, rho_p, rho_c, true);
    CHECK(pc > plain);
    const double arg_plain = std::pow(2.0, plain) - 1.0;
    const double arg_pc = std::pow(2.0, pc) - 1.0;
    CHECK(std::pow(arg_pc / arg_plain, 2.0 / alpha) == doctest::Approx(12.0 / 5.0).epsilon(1e-12));
    const double sat = 1.0 - std::exp(-rho_p / rho_c);
    const double want = std::log2(1.0 + std::pow(N * kappa * alpha * 3 * std::sqrt(3.0) / (4 * kPi * kPi * sat), alpha / 2));
    CHECK(plain == doctest::Approx(want).epsilon(1e-13));
    // saturation
    CHECK(cell_edge_rate(N, kappa, alpha, 1.0, 1e-6, true) == doctest::Approx(cell_edge_rate(N, kappa, alpha, 2.0, 1e-6, true)).epsilon(1e-12));
    CHECK(power_controlled_rate(N, kappa, alpha, rho_p, rho_c) == doctest::Approx(pc).epsilon(1e-13));
}

TEST_CASE("optimal reuse")
{
    CHECK(std::abs(optimal_reuse(2.5, 4, 1.0, 1e-6) - 1.0) < 0.15);
    CHECK(optimal_reuse(2.5, 4, 1.0, 1e-6) == doctest::Approx(1.0052075).epsilon(1e-6));
    for (double alpha : {2.5, 3.0, 4.0, 6.0}) {
        double prev = INFINITY;
        for (double N : {2.0, 4.0, 8.0, 16.0}) {
            const double k = optimal_reuse(alpha, N, 0.01, 0.001);
            CHECK(k < prev);
            prev = k;
        }
    }
    for (double N : {2.0, 8.0}) {
        double prev = INFINITY;
        for (double alpha : {2.5, 3.0, 4.0, 6.0}) {
            const double k = optimal_reuse(alpha, N, 0.01, 0.001);
            CHECK(k < prev);
            prev = k;
        }
    }
    // linear in the occupancy factor
    const double s1 = 1.0 - std::exp(-2.0);
    const double s2 = 1.0 - std::exp(-0.5);
    CHECK(optimal_reuse(3.0, 4, 0.02, 0.01) / optimal_reuse(3.0, 4, 0.005, 0.01) == doctest::Approx(s1 / s2).epsilon(1e-12));
}

TEST_CASE("reuse maximizer")
{
    const double alpha = 3.0, N = 4, rho_p = 0.01, rho_c = 0.002;
    const double ks = reuse_rate_maximizer(alpha, N, rho_p, rho_c);
    auto normalized = [&](double k) { return power_controlled_rate(N, k, alpha, rho_p, rho_c) / k; };
    CHECK(normalized(ks) > normalized(ks * 0.97));
    CHECK(normalized(ks) > normalized(ks * 1.03));
    CHECK(reuse_rate_maximizer(2.5, 4, 1.0, 1e-6) == doctest::Approx(0.353490382444101).epsilon(1e-9));
    // The published closed form sits well away from the maximizer.
    CHECK(normalized(optimal_reuse(alpha, N, rho_p, rho_c)) < normalized(ks));
}

TEST_CASE("limiting densities")
{
    ModelParams mp;
    const double rho_p = 0.01;
    mp.h = 1.0 / std::sqrt(kPi * rho_p);  // pi rho_p h^2 = 1
    CHECK(limiting_density(ActivationModel::independent, mp, rho_p) == rho_p);
    CHECK(limiting_density(ActivationModel::hc1, mp, rho_p) == doctest::Approx(0.0036787944117144233).epsilon(1e-13));
    CHECK(limiting_density(ActivationModel::hc2, mp, rho_p) == doctest::Approx(0.0063212055882855767).epsilon(1e-13));
    mp.rho_b = 0.001;
    mp.h = 1.0 / std::sqrt(kPi * mp.rho_b);
    CHECK(limiting_density(ActivationModel::boolean, mp, rho_p) == doctest::Approx(0.0063212055882855767).epsilon(1e-13));
    mp.rho_c = 0.001;
    mp.kappa = 3;
    CHECK(limiting_density(ActivationModel::cellular, mp, rho_p) == doctest::Approx(0.001 * (1 - std::exp(-10.0)) / 3).epsilon(1e-13));
    CHECK(limiting_activation(ActivationModel::cellular, mp, rho_p) == doctest::Approx((1 - std::exp(-10.0)) / 30).epsilon(1e-13));
    // HC-II activation is below one and above HC-I's.
    mp.h = 5.0;
    CHECK(limiting_activation(ActivationModel::hc2, mp, rho_p) > limiting_activation(ActivationModel::hc1, mp, rho_p));
}

TEST_CASE("limiting EDF")
{
    for (double nu : {0.37, 1.0}) {
        const auto p = params(4.0, nu, 50.0);
        const double x0 = edf_support_edge(p);
        CHECK(x0 == doctest::Approx(std::pow(kPi * 0.01 / 50.0, 2.0)).epsilon(1e-14));
        CHECK(limiting_edf(0.0, p) == doctest::Approx(1.0 - nu));
        CHECK(limiting_edf(x0 * 0.5, p) == doctest::Approx(1.0 - nu));
        CHECK(limiting_edf(x0 * (1 + 1e-12), p) == doctest::Approx(1.0 - nu).epsilon(1e-9));
        CHECK(limiting_edf(1e30, p) == doctest::Approx(1.0).epsilon(1e-12));
        double prev = -1.0;
        for (double x = x0 * 0.1; x < x0 * 1e8; x *= 1.7) {
            const double h = limiting_edf(x, p);
            CHECK(h >= prev);
            prev = h;
        }
    }
}
