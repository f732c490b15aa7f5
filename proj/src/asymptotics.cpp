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

#include "corrnet/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace corrnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

double fixed_point_gap(double beta, const AsymptoticParams& p)
{
    const auto s = fixed_point_sides(beta, p);
    return s.lhs - s.rhs;
}

// Fraction of band-0 cells with at least one mobile.
double cell_occupancy(double rho_p, double rho_c) { return -std::expm1(-rho_p / rho_c); }

// int_0^u0 du / (u^(alpha/2) + gamma). The substitution u = tau^(-2/alpha)
// maps the tail of the power distribution onto this finite interval.
double oracle_integral(double gamma, double u0, double alpha)
{
    using boost::math::quadrature::gauss_kronrod;
    const double half = alpha / 2.0;
    auto integrand = [&](double u) { return 1.0 / (std::pow(u, half) + gamma); };

    // Breakpoints cluster around the knee u = gamma^(2/alpha), where the
    // integrand turns from flat to power-law decay.
    const double knee = std::pow(gamma, 1.0 / half);
    std::vector<double> cuts{0.0};
    for (double b = knee * std::ldexp(1.0, -12); b < u0; b *= 2.0) cuts.push_back(b);
    cuts.push_back(u0);

    double total = 0.0;
    double error = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double err = 0.0;
        total += gauss_kronrod<double, 31>::integrate(integrand, cuts[k], cuts[k + 1], 0, 0.0, &err);
        error += err;
    }
    if (!(error <= 1e-10 * total)) {
        std::ostringstream os;
        os << "fixed_point_oracle: quadrature did not converge (error estimate " << error << " on " << total << ")";
        throw std::runtime_error(os.str());
    }
    return total;
}

}  // namespace

void AsymptoticParams::validate() const
{
    auto fail = [](const std::string& what) { throw std::invalid_argument("asymptotic params: " + what); };
    if (!(rho_p > 0.0)) fail("rho_p must be positive");
    if (!(nu > 0.0 && nu <= 1.0)) fail("nu must lie in (0, 1]");
    if (!(alpha > 2.0)) fail("alpha must exceed 2");
    if (!(c * nu > 1.0)) fail("c * nu must exceed 1");
}

std::string_view to_string(SolutionMethod m)
{
    switch (m) {
    case SolutionMethod::fixed_point: return "fixed_point";
    case SolutionMethod::large_c: return "large_c";
    case SolutionMethod::quadrature_oracle: return "quadrature_oracle";
    }
    return "unknown";
}

double AsymptoticSolution::rate(double N, double r_T) const
{
    return std::log2(1.0 + std::pow(N, alpha / 2.0) * std::pow(r_T, -alpha) * beta);
}

FixedPointSides fixed_point_sides(double beta, const AsymptoticParams& p)
{
    const double a = 2.0 / p.alpha;
    const double pr = kPi * p.rho();
    FixedPointSides s;
    s.lhs = 2.0 * kPi * pr * std::pow(beta, a) / (p.alpha * std::sin(2.0 * kPi / p.alpha));
    // The tail correction is written in terms of the dimensionless product
    // beta * x0, with x0 = (pi rho_p / c)^(alpha/2) the support edge of H.
    const double bx = beta * std::pow(kPi * p.rho_p / p.c, p.alpha / 2.0);
    const double z = bx / (1.0 + bx);
    const double coeff = 2.0 * pr * std::pow(bx, 1.0 - a) * std::pow(beta, a) / ((p.alpha - 2.0) * std::pow(1.0 + bx, 1.0 - a));
    s.rhs = 1.0 + coeff * gauss_2f1(1.0 - a, 1.0 - a, 2.0 - a, z);
    return s;
}

AsymptoticSolution solve_beta_fixed_point(const AsymptoticParams& params)
{
    params.validate();
    const double seed = beta_large_c(params.rho(), params.alpha);
    double lo = seed / 10.0;
    double hi = seed * 10.0;
    double f_lo = fixed_point_gap(lo, params);
    double f_hi = fixed_point_gap(hi, params);
    for (int k = 0; k < 60 && !(f_lo < 0.0 && f_hi > 0.0); ++k) {
        if (!(f_lo < 0.0)) f_lo = fixed_point_gap(lo /= 10.0, params);
        if (!(f_hi > 0.0)) f_hi = fixed_point_gap(hi *= 10.0, params);
    }
    if (!(f_lo < 0.0 && f_hi > 0.0)) {
        std::ostringstream os;
        os << "no sign change of the fixed-point equation for rho=" << params.rho() << " c=" << params.c
           << " alpha=" << params.alpha;
        throw NoBracket(os.str());
    }

    // Geometric bisection to a narrow bracket.
    while (hi / lo - 1.0 > 1e-6) {
        const double mid = std::sqrt(lo * hi);
        const double f = fixed_point_gap(mid, params);
        if (f < 0.0) lo = mid;
        else hi = mid;
    }

    // Newton with a central-difference slope, falling back to bisection
    // whenever a step leaves the bracket.
    double beta = std::sqrt(lo * hi);
    for (int iter = 0; iter < 50; ++iter) {
        const double f = fixed_point_gap(beta, params);
        if (f == 0.0) break;
        if (f < 0.0) lo = beta;
        else hi = beta;
        const double step_h = 1e-6 * beta;
        const double slope = (fixed_point_gap(beta + step_h, params) - fixed_point_gap(beta - step_h, params)) / (2.0 * step_h);
        double next = beta - f / slope;
        if (!(slope > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - beta) <= 1e-15 * beta) {
            beta = next;
            break;
        }
        beta = next;
    }

    const auto sides = fixed_point_sides(beta, params);
    return {beta, SolutionMethod::fixed_point, std::abs(sides.lhs - sides.rhs) / sides.rhs, params.alpha};
}

int count_sign_changes(const AsymptoticParams& params, double lo, double hi, int points)
{
    int changes = 0;
    double prev = 0.0;
    for (int k = 0; k < points; ++k) {
        const double beta = lo * std::pow(hi / lo, static_cast<double>(k) / (points - 1));
        const double f = fixed_point_gap(beta, params);
        if (k > 0 && ((prev < 0.0 && f >= 0.0) || (prev >= 0.0 && f < 0.0))) ++changes;
        prev = f;
    }
    return changes;
}

AsymptoticSolution fixed_point_oracle(const AsymptoticParams& params)
{
    params.validate();
    const double u0 = params.c / (kPi * params.rho_p);
    const double scale = kPi * params.rho();
    auto excess = [&](double gamma) { return gamma * scale * oracle_integral(gamma, u0, params.alpha) - 1.0; };

    // The integral form increases monotonically from 0 to c*nu.
    double lo = 1.0;
    while (excess(lo) > 0.0) lo /= 2.0;
    double hi = 2.0 * lo;
    while (excess(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("fixed_point_oracle: no bracket");
    }
    for (int iter = 0; iter < 200 && hi / lo - 1.0 > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    const double gamma = 0.5 * (lo + hi);
    return {gamma, SolutionMethod::quadrature_oracle, std::abs(excess(gamma)), params.alpha};
}

double beta_large_c(double rho, double alpha)
{
    return std::pow(alpha / (2.0 * kPi * kPi * rho) * std::sin(2.0 * kPi / alpha), alpha / 2.0);
}

double rate_approx(double N, double rho, double alpha, double r_T)
{
    return std::log2(1.0 + std::pow(N, alpha / 2.0) * std::pow(r_T, -alpha) * beta_large_c(rho, alpha));
}

double cell_edge_rate(double N, double kappa, double alpha, double rho_p, double rho_c, bool power_control)
{
    const double coeff = power_control ? 9.0 * kSqrt3 / (5.0 * kPi * kPi) : 3.0 * kSqrt3 / (4.0 * kPi * kPi);
    const double inner = coeff * N * kappa * alpha / cell_occupancy(rho_p, rho_c) * std::sin(2.0 * kPi / alpha);
    return std::log2(1.0 + std::pow(inner, alpha / 2.0));
}

double power_controlled_rate(double N, double kappa, double alpha, double rho_p, double rho_c)
{
    return cell_edge_rate(N, kappa, alpha, rho_p, rho_c, true);
}

double optimal_reuse(double alpha, double N, double rho_p, double rho_c)
{
    const double w = lambert_w0(-(alpha / 2.0) * std::exp(-alpha / 2.0));
    return std::pow(-(w + alpha) / w, 2.0 / alpha) * 5.0 * kPi * kPi * cell_occupancy(rho_p, rho_c)
           / (9.0 * kSqrt3 * N * alpha) / std::sin(2.0 * kPi / alpha);
}

double reuse_rate_maximizer(double alpha, double N, double rho_p, double rho_c)
{
    // Stationary point of log2(1 + (A k)^(alpha/2)) / k: with t = (A k)^(alpha/2),
    // (alpha/2) t / (1 + t) = ln(1 + t), solved by 1 + t = -(alpha/2) / w.
    const double w = lambert_w0(-(alpha / 2.0) * std::exp(-alpha / 2.0));
    const double t = -(alpha + 2.0 * w) / (2.0 * w);
    return std::pow(t, 2.0 / alpha) * 5.0 * kPi * kPi * cell_occupancy(rho_p, rho_c)
           / (9.0 * kSqrt3 * N * alpha) / std::sin(2.0 * kPi / alpha);
}

double limiting_density(ActivationModel model, const ModelParams& mp, double rho_p)
{
    const double disk = kPi * mp.h * mp.h;
    switch (model) {
    case ActivationModel::independent: return rho_p;
    case ActivationModel::hc1: return rho_p * std::exp(-rho_p * disk);
    case ActivationModel::hc2: return disk > 0.0 ? -std::expm1(-rho_p * disk) / disk : rho_p;
    case ActivationModel::cellular: return mp.rho_c * cell_occupancy(rho_p, mp.rho_c) / mp.kappa;
    case ActivationModel::boolean: return rho_p * -std::expm1(-mp.rho_b * disk);
    }
    return rho_p;
}

double limiting_activation(ActivationModel model, const ModelParams& params, double rho_p)
{
    return limiting_density(model, params, rho_p) / rho_p;
}

double edf_support_edge(const AsymptoticParams& p)
{
    return std::pow(kPi * p.rho_p / p.c, p.alpha / 2.0);
}

double limiting_edf(double x, const AsymptoticParams& p)
{
    if (x < 0.0) return 0.0;
    if (x <= edf_support_edge(p)) return 1.0 - p.nu;
    return 1.0 - kPi * p.rho() / p.c * std::pow(x, -2.0 / p.alpha);
}

double predicted_rate(const NetworkConfig& config)
{
    const auto& mp = config.params;
    if (config.model == ActivationModel::cellular && mp.power_control)
        return power_controlled_rate(config.N, mp.kappa, config.alpha, config.rho_p, mp.rho_c);
    return rate_approx(config.N, limiting_density(config.model, mp, config.rho_p), config.alpha, config.r_T);
}

}  // namespace corrnet
