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

#include "corrnet/pointproc.hpp"

#include <stdexcept>
#include <string_view>

namespace corrnet {

/// The solver found no sign change of the fixed-point function; the
/// parameters are outside the regime with a positive solution.
class NoBracket : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AsymptoticParams {
    double rho_p = 0.01;  // potential-interferer density
    double nu = 1.0;      // limiting activation probability
    double c = 50.0;      // n / N
    double alpha = 4.0;   // path-loss exponent

    /// Limiting density of active interferers, nu * rho_p.
    double rho() const { return nu * rho_p; }
    /// Throws std::invalid_argument unless 0 < nu <= 1, c*nu > 1, alpha > 2.
    void validate() const;
};

enum class SolutionMethod { fixed_point, large_c, quadrature_oracle };
std::string_view to_string(SolutionMethod m);

struct AsymptoticSolution {
    double beta = 0.0;
    SolutionMethod method = SolutionMethod::fixed_point;
    double residual = 0.0;
    double alpha = 4.0;

    /// log2(1 + N^(alpha/2) r_T^-alpha beta).
    double rate(double N, double r_T) const;
};

/// Both sides of the hypergeometric fixed-point equation at beta.
struct FixedPointSides {
    double lhs = 0.0;
    double rhs = 0.0;
};
FixedPointSides fixed_point_sides(double beta, const AsymptoticParams& params);

/// Solves the hypergeometric fixed-point equation for the limiting
/// normalized SIR by bracketed bisection refined with safeguarded Newton
/// steps. Throws NoBracket when no sign change is found.
AsymptoticSolution solve_beta_fixed_point(const AsymptoticParams& params);

/// Number of sign changes of lhs - rhs over `points` log-spaced samples in
/// [lo, hi].
int count_sign_changes(const AsymptoticParams& params, double lo, double hi, int points = 64);

/// Independent route: solves 1 = gamma c int tau dH(tau) / (1 + tau gamma)
/// with the limiting distribution of scaled received powers, by adaptive
/// Gauss-Kronrod quadrature and bisection. Does not touch 2F1.
AsymptoticSolution fixed_point_oracle(const AsymptoticParams& params);

/// c -> infinity limit: [alpha / (2 pi^2 rho) sin(2 pi / alpha)]^(alpha/2).
double beta_large_c(double rho, double alpha);

/// Large-N, large-c mean rate with active density rho.
double rate_approx(double N, double rho, double alpha, double r_T);

/// Mean rate of a cell-edge uplink, with or without path-loss-inverting
/// power control.
double cell_edge_rate(double N, double kappa, double alpha, double rho_p, double rho_c, bool power_control);

/// Mean rate of an uplink with path-loss-inverting power control. Does not
/// depend on the link length.
double power_controlled_rate(double N, double kappa, double alpha, double rho_p, double rho_c);

/// Published closed form for the real-valued reuse factor of the
/// reuse-normalized power-controlled rate,
/// (-(W + alpha) / W)^(2/alpha) * 5 pi^2 (1 - e^(-rho_p/rho_c)) / (9 sqrt(3) N alpha) * csc(2 pi / alpha)
/// with W = W0(-(alpha/2) e^(-alpha/2)).
double optimal_reuse(double alpha, double N, double rho_p, double rho_c);

/// Exact maximizer of power_controlled_rate(k) / k over real k > 0. Differs
/// from optimal_reuse, which uses (W + alpha) / W where the stationarity
/// condition gives (2W + alpha) / (2W).
double reuse_rate_maximizer(double alpha, double N, double rho_p, double rho_c);

/// Limiting density of active interferers for an activation model.
double limiting_density(ActivationModel model, const ModelParams& params, double rho_p);

/// Limiting activation probability nu = limiting_density / rho_p.
double limiting_activation(ActivationModel model, const ModelParams& params, double rho_p);

/// Limit H(x) of the empirical distribution of scaled received powers:
/// 1 - nu on [0, x0], 1 - (pi rho / c) x^(-2/alpha) above, with
/// x0 = (pi rho_p / c)^(alpha/2).
double limiting_edf(double x, const AsymptoticParams& params);

/// Support edge x0 = (pi rho_p / c)^(alpha/2) of the active-node powers.
double edf_support_edge(const AsymptoticParams& params);

/// Mean rate predicted for one network configuration, using the model's
/// limiting density (and the power-control variant for cellular).
double predicted_rate(const NetworkConfig& config);

}  // namespace corrnet
