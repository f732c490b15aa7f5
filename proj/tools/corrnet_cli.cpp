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

// corrnet: Monte Carlo and asymptotic rate analysis for MMSE receivers in
// networks with spatially correlated interferers.
//
//   corrnet simulate  --config run.yaml [--seed S] [--out table.csv]
//   corrnet asymptote --alpha 4 --rho-p 0.01 --nu 1 --c 50
//   corrnet density   --model hc1 --rho-p 0.01 --h 5.64
//   corrnet plot      --in table.csv --out chart.svg
//   corrnet reuse-opt --alpha 2.5 --N 4 --rho-p 0.01 --rho-c 0.0001
//
// Exit codes: 0 success, 1 density outside its 3-sigma band, 2 invalid
// input, 3 no solution bracket.

#include "corrnet/asymptotics.hpp"
#include "corrnet/format.hpp"
#include "corrnet/montecarlo.hpp"
#include "corrnet/report_io.hpp"
#include "corrnet/run_config.hpp"
#include "corrnet/svg_plot.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace corrnet;

constexpr int kExitDensityOutside = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoBracket = 3;

bool write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return false;
    }
    out << contents;
    return static_cast<bool>(out);
}

struct SimulateOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> plot;
    std::optional<std::size_t> replications;
    std::optional<unsigned> threads;
    std::string format = "csv";
};

int cmd_simulate(const SimulateOptions& opt)
{
    RunConfig run;
    try {
        run = load_run_config(opt.config);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    if (opt.seed) run.spec.master_seed = *opt.seed;
    if (opt.replications) run.spec.replications = *opt.replications;
    if (opt.threads) run.spec.threads = *opt.threads;
    if (opt.out) run.csv_path = opt.out;
    if (opt.plot) run.svg_path = opt.plot;

    for (const auto& p : run.spec.points)
        for (const auto& w : p.warnings()) std::cerr << "warning: N=" << p.N << ": " << w << '\n';

    std::cerr << "simulating " << run.spec.points.size() << " points x " << run.spec.replications
              << " replications (seed " << run.spec.master_seed << ")\n";
    ExperimentReport report;
    try {
        report = run_experiment(run.spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    const std::string csv = report_csv(report);
    if (run.csv_path) {
        if (!write_file(*run.csv_path, csv)) return kExitInvalid;
        std::cout << report_summary(report);
    } else {
        std::cout << csv;
        std::cerr << report_summary(report);
    }
    if (run.svg_path) {
        const auto rows = parse_report_csv(csv);
        if (!write_file(*run.svg_path, render_rate_plot(rows))) return kExitInvalid;
    }
    for (const auto& p : report.points)
        if (p.failed) std::cerr << "warning: N=" << p.config.N << " flagged: " << p.failure << '\n';
    return 0;
}

struct AsymptoteOptions {
    double alpha = 4.0;
    double rho_p = 0.01;
    std::optional<double> nu;
    std::optional<double> rho;
    double c = 50.0;
    std::optional<double> N;
    std::optional<double> r_T;
    std::optional<double> kappa;
    std::optional<double> rho_c;
};

int cmd_asymptote(const AsymptoteOptions& opt)
{
    AsymptoticParams params;
    params.alpha = opt.alpha;
    params.rho_p = opt.rho_p;
    params.c = opt.c;
    params.nu = opt.rho ? *opt.rho / opt.rho_p : opt.nu.value_or(1.0);

    std::cout << "alpha=" << format_number(params.alpha) << " rho_p=" << format_number(params.rho_p)
              << " nu=" << format_number(params.nu) << " rho=" << format_number(params.rho())
              << " c=" << format_number(params.c) << '\n';
    if (!(params.c * params.nu > 1.0))
        std::cerr << "warning: c*nu = " << params.c * params.nu
                  << " <= 1; the fixed point needs more active interferers than branches\n";

    AsymptoticSolution fixed, oracle;
    try {
        fixed = solve_beta_fixed_point(params);
        oracle = fixed_point_oracle(params);
    } catch (const NoBracket& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoBracket;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << " (alpha=" << params.alpha << " rho_p=" << params.rho_p
                  << " nu=" << params.nu << " c=" << params.c << ")\n";
        return kExitNoBracket;
    }
    const double large_c = beta_large_c(params.rho(), params.alpha);
    auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };

    std::cout << "beta_fixed_point=" << format_number(fixed.beta) << " (residual " << format_number(fixed.residual)
              << ")\n";
    std::cout << "beta_large_c=" << format_number(large_c) << '\n';
    std::cout << "beta_quadrature_oracle=" << format_number(oracle.beta) << '\n';
    std::cout << "rel_diff fixed_point/oracle=" << format_number(rel(fixed.beta, oracle.beta))
              << " fixed_point/large_c=" << format_number(rel(fixed.beta, large_c))
              << " oracle/large_c=" << format_number(rel(oracle.beta, large_c)) << '\n';

    if (opt.N) {
        const double r_T = opt.r_T.value_or(1.0 / std::sqrt(std::numbers::pi * params.rho_p));
        std::cout << "rate N=" << format_number(*opt.N) << " r_T=" << format_number(r_T)
                  << ": fixed_point=" << format_number(fixed.rate(*opt.N, r_T))
                  << " large_c=" << format_number(rate_approx(*opt.N, params.rho(), params.alpha, r_T)) << '\n';
        if (opt.kappa && opt.rho_c) {
            std::cout << "cell_edge_rate kappa=" << format_number(*opt.kappa)
                      << ": no_power_control=" << format_number(cell_edge_rate(*opt.N, *opt.kappa, params.alpha, params.rho_p, *opt.rho_c, false))
                      << " power_control=" << format_number(cell_edge_rate(*opt.N, *opt.kappa, params.alpha, params.rho_p, *opt.rho_c, true))
                      << '\n';
            std::cout << "kappa_star=" << format_number(optimal_reuse(params.alpha, *opt.N, params.rho_p, *opt.rho_c))
                      << '\n';
        }
    }
    return 0;
}

struct DensityOptions {
    std::optional<std::string> config;
    std::string model = "independent";
    double rho_p = 0.01;
    double h = 0.0;
    double rho_b = 0.0;
    double rho_c = 0.0;
    int kappa = 1;
    int N = 8;
    double c = 50.0;
    double alpha = 4.0;
    std::optional<double> radius;
    std::size_t replications = 200;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

int cmd_density(const DensityOptions& opt)
{
    NetworkConfig cfg;
    try {
        if (opt.config) {
            cfg = load_run_config(*opt.config).spec.points.front();
        } else {
            cfg.model = parse_activation_model(opt.model);
            cfg.rho_p = opt.rho_p;
            cfg.alpha = opt.alpha;
            cfg.N = opt.N;
            cfg.c = opt.c;
            cfg.r_T = 1.0 / std::sqrt(std::numbers::pi * cfg.rho_p);
            cfg.params.h = opt.h;
            cfg.params.rho_b = opt.rho_b;
            cfg.params.rho_c = opt.rho_c;
            cfg.params.kappa = opt.kappa;
        }
        if (opt.radius) {
            // Choose N so that R reaches the requested radius at this c.
            const double n = std::numbers::pi * cfg.rho_p * *opt.radius * *opt.radius;
            cfg.N = std::max(1, static_cast<int>(std::lround(n / cfg.c)));
        }
        cfg.validate();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    const auto est = density_estimate(cfg, opt.replications, opt.seed, opt.threads);
    const bool inside = est.within(3.0);
    std::cout << "model=" << to_string(cfg.model) << " R=" << format_number(cfg.radius())
              << " replications=" << est.replications << '\n';
    std::cout << "predicted=" << format_number(est.predicted) << " simulated=" << format_number(est.empirical)
              << " rel_error=" << format_number(est.relative_error()) << " band=[" << format_number(est.predicted - 3 * est.sigma)
              << ", " << format_number(est.predicted + 3 * est.sigma) << "] "
              << (inside ? "inside" : "OUTSIDE") << '\n';
    return inside ? 0 : kExitDensityOutside;
}

int cmd_plot(const std::string& in_path, const std::string& out_path)
{
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "error: cannot read " << in_path << '\n';
        return kExitInvalid;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string svg;
    try {
        const auto rows = parse_report_csv(buf.str());
        svg = render_rate_plot(rows);
    } catch (const CsvError& e) {
        std::cerr << "error: " << in_path << ": " << e.what() << '\n';
        return kExitInvalid;
    }
    return write_file(out_path, svg) ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rate analysis of MMSE receivers amid spatially correlated interferers"};
    app.require_subcommand(1);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo sweep from a run configuration");
    simulate->add_option("--config", sim.config, "YAML run configuration")->required()->check(CLI::ExistingFile);
    simulate->add_option("--seed", sim.seed, "Override master_seed");
    simulate->add_option("--out", sim.out, "CSV output path (default: config output.csv, else stdout)");
    simulate->add_option("--plot", sim.plot, "Also write an SVG chart");
    simulate->add_option("--replications", sim.replications, "Override replications")->check(CLI::PositiveNumber);
    simulate->add_option("--threads", sim.threads, "Worker threads")->check(CLI::PositiveNumber);
    simulate->add_option("--format", sim.format, "Output format")->check(CLI::IsMember({"csv"}));

    AsymptoteOptions asy;
    auto* asymptote = app.add_subcommand("asymptote", "Limiting normalized SIR and rate predictions");
    asymptote->add_option("--alpha", asy.alpha, "Path-loss exponent")->check(CLI::Range(2.0, 1e6));
    asymptote->add_option("--rho-p", asy.rho_p, "Potential-interferer density")->check(CLI::PositiveNumber);
    auto* nu_opt = asymptote->add_option("--nu", asy.nu, "Limiting activation probability");
    asymptote->add_option("--rho", asy.rho, "Limiting active density (instead of --nu)")->excludes(nu_opt);
    asymptote->add_option("--c", asy.c, "Ratio n/N")->check(CLI::PositiveNumber);
    asymptote->add_option("--N", asy.N, "Diversity branches for rate predictions");
    asymptote->add_option("--r-T", asy.r_T, "Link length (default: pi rho_p r_T^2 = 1)");
    asymptote->add_option("--kappa", asy.kappa, "Reuse factor for cell-edge rates");
    asymptote->add_option("--rho-c", asy.rho_c, "Base-station density for cell-edge rates");

    DensityOptions den;
    auto* density = app.add_subcommand("density", "Simulated vs limiting active-interferer density");
    density->set_help_flag("--help", "Print this help message and exit");
    density->add_option("--config", den.config, "Use the first point of a run configuration")->check(CLI::ExistingFile);
    density->add_option("--model", den.model, "independent, hc1, hc2, cellular or boolean");
    density->add_option("--rho-p", den.rho_p, "Potential-interferer density");
    density->add_option("--h", den.h, "Hard-core or grain radius");
    density->add_option("--rho-b", den.rho_b, "Cluster-center density");
    density->add_option("--rho-c", den.rho_c, "Base-station density");
    density->add_option("--kappa", den.kappa, "Reuse factor");
    density->add_option("--N", den.N, "Diversity branches (sets the network size with --c)");
    density->add_option("--c", den.c, "Ratio n/N");
    density->add_option("--radius", den.radius, "Network radius (overrides --N)");
    density->add_option("--replications", den.replications, "Replications")->check(CLI::PositiveNumber);
    density->add_option("--seed", den.seed, "Master seed");
    density->add_option("--threads", den.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string plot_in, plot_out;
    auto* plot = app.add_subcommand("plot", "SVG chart from a simulate CSV");
    plot->add_option("--in", plot_in, "CSV produced by simulate")->required();
    plot->add_option("--out", plot_out, "SVG output path")->required();

    double ro_alpha = 4.0, ro_N = 8.0, ro_rho_p = 0.01, ro_rho_c = 0.001;
    auto* reuse = app.add_subcommand("reuse-opt", "Reuse factor maximizing the reuse-normalized rate");
    reuse->add_option("--alpha", ro_alpha, "Path-loss exponent")->check(CLI::Range(2.0, 1e6));
    reuse->add_option("--N", ro_N, "Diversity branches")->check(CLI::PositiveNumber);
    reuse->add_option("--rho-p", ro_rho_p, "Mobile density")->check(CLI::PositiveNumber);
    reuse->add_option("--rho-c", ro_rho_c, "Base-station density")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    if (*simulate) return cmd_simulate(sim);
    if (*asymptote) return cmd_asymptote(asy);
    if (*density) return cmd_density(den);
    if (*plot) return cmd_plot(plot_in, plot_out);
    if (*reuse) {
        std::cout << "kappa_star=" << format_number(optimal_reuse(ro_alpha, ro_N, ro_rho_p, ro_rho_c))
                  << " rate_maximizer=" << format_number(reuse_rate_maximizer(ro_alpha, ro_N, ro_rho_p, ro_rho_c)) << '\n';
        return 0;
    }
    return kExitInvalid;
}
