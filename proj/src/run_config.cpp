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

#include "corrnet/run_config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

namespace corrnet {

namespace {

const std::set<std::string> kTopKeys{"schema_version", "network", "model", "sweep", "replications",
                                     "master_seed", "threads", "output"};
const std::set<std::string> kNetworkKeys{"rho_p", "alpha", "c", "N", "r_T", "link"};
const std::set<std::string> kModelKeys{"type", "h", "h_over_r_T", "rho_b", "rho_b_pi_h2", "rho_c",
                                       "rho_c_over_rho_p", "kappa", "power_control"};
const std::set<std::string> kOutputKeys{"csv", "svg"};

class Parser {
public:
    explicit Parser(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& msg) const
    {
        std::ostringstream os;
        os << origin_;
        if (at && at.Mark().line >= 0) os << ':' << at.Mark().line + 1 << ':' << at.Mark().column + 1;
        os << ": " << msg;
        throw ConfigError(os.str());
    }

    void require_map(const YAML::Node& node, const std::string& what) const
    {
        if (!node.IsMap()) fail(node, what + " must be a mapping");
    }

    void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& section) const
    {
        for (const auto& kv : map) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) fail(kv.first, "unknown key '" + key + "' in " + section);
        }
    }

    template <typename T>
    T scalar(const YAML::Node& node, const std::string& key) const
    {
        if (!node.IsScalar()) fail(node, "'" + key + "' must be a scalar");
        try {
            return node.as<T>();
        } catch (const YAML::Exception&) {
            fail(node, "'" + key + "' has an invalid value '" + node.Scalar() + "'");
        }
    }

private:
    std::string origin_;
};

// Settings of one sweep point before derived quantities are resolved.
using Settings = std::map<std::string, YAML::Node>;

NetworkConfig resolve(const Parser& ps, const Settings& net, const Settings& model, const YAML::Node& where)
{
    auto get = [&](const Settings& s, const std::string& key) -> const YAML::Node* {
        auto it = s.find(key);
        return it == s.end() ? nullptr : &it->second;
    };
    auto number = [&](const Settings& s, const std::string& key) -> std::optional<double> {
        if (const auto* n = get(s, key)) return ps.scalar<double>(*n, key);
        return std::nullopt;
    };

    NetworkConfig cfg;
    const auto* type = get(model, "type");
    if (!type) ps.fail(where, "model.type is required");
    try {
        cfg.model = parse_activation_model(ps.scalar<std::string>(*type, "type"));
    } catch (const std::invalid_argument& e) {
        ps.fail(*type, e.what());
    }

    const auto rho_p = number(net, "rho_p");
    const auto alpha = number(net, "alpha");
    const auto c = number(net, "c");
    if (!rho_p || !alpha || !c) ps.fail(where, "network.rho_p, network.alpha and network.c are required");
    cfg.rho_p = *rho_p;
    cfg.alpha = *alpha;
    cfg.c = *c;
    if (const auto* n = get(net, "N")) cfg.N = ps.scalar<int>(*n, "N");
    else ps.fail(where, "N must be given in network or sweep");

    auto& mp = cfg.params;
    if (const auto* k = get(model, "kappa")) mp.kappa = ps.scalar<int>(*k, "kappa");
    if (const auto* pc = get(model, "power_control")) mp.power_control = ps.scalar<bool>(*pc, "power_control");
    const auto rho_c = number(model, "rho_c");
    const auto rho_c_ratio = number(model, "rho_c_over_rho_p");
    if (rho_c && rho_c_ratio) ps.fail(where, "give only one of model.rho_c and model.rho_c_over_rho_p");
    if (rho_c) mp.rho_c = *rho_c;
    if (rho_c_ratio) mp.rho_c = *rho_c_ratio * cfg.rho_p;

    const auto r_T = number(net, "r_T");
    const auto* link = get(net, "link");
    if (r_T && link) ps.fail(*link, "give only one of network.r_T and network.link");
    if (r_T) {
        cfg.r_T = *r_T;
    } else if (link) {
        const auto rule = ps.scalar<std::string>(*link, "link");
        if (rule == "unit_closer") {
            // pi rho_p r_T^2 = 1: one potential interferer closer on average.
            cfg.r_T = 1.0 / std::sqrt(std::numbers::pi * cfg.rho_p);
        } else if (rule == "cell_edge") {
            if (!(mp.rho_c > 0.0)) ps.fail(*link, "link 'cell_edge' needs the base-station density");
            cfg.r_T = std::sqrt(2.0 / (3.0 * std::numbers::sqrt3 * mp.rho_c));
        } else {
            ps.fail(*link, "unknown link rule '" + rule + "' (expected unit_closer or cell_edge)");
        }
    } else {
        ps.fail(where, "network.r_T or network.link is required");
    }

    const auto h = number(model, "h");
    const auto h_rel = number(model, "h_over_r_T");
    if (h && h_rel) ps.fail(where, "give only one of model.h and model.h_over_r_T");
    if (h) mp.h = *h;
    if (h_rel) mp.h = *h_rel * cfg.r_T;

    const auto rho_b = number(model, "rho_b");
    const auto coverage = number(model, "rho_b_pi_h2");
    if (rho_b && coverage) ps.fail(where, "give only one of model.rho_b and model.rho_b_pi_h2");
    if (rho_b) mp.rho_b = *rho_b;
    if (coverage) {
        if (!(mp.h > 0.0)) ps.fail(where, "model.rho_b_pi_h2 needs a positive h");
        mp.rho_b = *coverage / (std::numbers::pi * mp.h * mp.h);
    }

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        ps.fail(where, e.what());
    }
    return cfg;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& origin)
{
    const Parser ps(origin);
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        std::ostringstream os;
        os << origin << ':' << e.mark.line + 1 << ':' << e.mark.column + 1 << ": " << e.msg;
        throw ConfigError(os.str());
    }
    ps.require_map(root, "top level");
    ps.reject_unknown(root, kTopKeys, "top level");

    const auto version = root["schema_version"];
    if (!version) ps.fail(root, "schema_version is required");
    if (ps.scalar<int>(version, "schema_version") != kRunConfigSchemaVersion)
        ps.fail(version, "unsupported schema_version (expected " + std::to_string(kRunConfigSchemaVersion) + ")");

    Settings net;
    Settings model;
    const auto net_node = root["network"];
    const auto model_node = root["model"];
    if (!net_node) ps.fail(root, "network section is required");
    if (!model_node) ps.fail(root, "model section is required");
    ps.require_map(net_node, "network");
    ps.require_map(model_node, "model");
    ps.reject_unknown(net_node, kNetworkKeys, "network");
    ps.reject_unknown(model_node, kModelKeys, "model");
    for (const auto& kv : net_node) net[kv.first.as<std::string>()] = kv.second;
    for (const auto& kv : model_node) model[kv.first.as<std::string>()] = kv.second;

    // Sweep axes in file order; the first axis varies slowest.
    std::vector<std::pair<std::string, std::vector<YAML::Node>>> axes;
    if (const auto sweep = root["sweep"]) {
        ps.require_map(sweep, "sweep");
        for (const auto& kv : sweep) {
            const auto key = kv.first.as<std::string>();
            const bool known = (kNetworkKeys.count(key) || kModelKeys.count(key)) && key != "type" && key != "link";
            if (!known) ps.fail(kv.first, "key '" + key + "' cannot be swept");
            if (!kv.second.IsSequence() || kv.second.size() == 0)
                ps.fail(kv.second, "sweep." + key + " must be a non-empty list");
            std::vector<YAML::Node> values(kv.second.begin(), kv.second.end());
            axes.emplace_back(key, std::move(values));
        }
    }

    RunConfig out;
    std::vector<std::size_t> idx(axes.size(), 0);
    const YAML::Node where = root["sweep"] ? root["sweep"] : root;
    for (;;) {
        Settings n = net;
        Settings m = model;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const auto& [key, values] = axes[a];
            (kNetworkKeys.count(key) ? n : m)[key] = values[idx[a]];
        }
        out.spec.points.push_back(resolve(ps, n, m, where));

        bool done = true;
        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < axes[a].second.size()) {
                done = false;
                break;
            }
            idx[a] = 0;
        }
        if (done) break;
    }

    if (const auto r = root["replications"]) {
        const auto reps = ps.scalar<long long>(r, "replications");
        if (reps < 1) ps.fail(r, "replications must be at least 1");
        out.spec.replications = static_cast<std::size_t>(reps);
    }
    if (const auto s = root["master_seed"]) out.spec.master_seed = ps.scalar<std::uint64_t>(s, "master_seed");
    if (const auto t = root["threads"]) {
        const auto threads = ps.scalar<int>(t, "threads");
        if (threads < 1) ps.fail(t, "threads must be at least 1");
        out.spec.threads = static_cast<unsigned>(threads);
    }
    if (const auto o = root["output"]) {
        ps.require_map(o, "output");
        ps.reject_unknown(o, kOutputKeys, "output");
        if (o["csv"]) out.csv_path = ps.scalar<std::string>(o["csv"], "csv");
        if (o["svg"]) out.svg_path = ps.scalar<std::string>(o["svg"], "svg");
    }
    return out;
}

RunConfig load_run_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open configuration file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str(), path);
}

}  // namespace corrnet
