// Copyright 2026 The qhomog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qhomog: simulate, bound, sweep and verify qubit homogenization protocols.
//
//   qhomog simulate --protocol pswap --eta pi/4 -N 20 --system zero --reservoir plus
//   qhomog bounds single --delta 0.1 --d 2
//   qhomog verify maps --seed 7
//   qhomog sweep --axis eta=0:pi/2:pi/16 -N 10

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhomog/bounds.hpp"
#include "qhomog/error.hpp"
#include "qhomog/experiments.hpp"

namespace {

using namespace qhomog;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;
constexpr int kExitInfeasible = 4;

struct RunOptions {
    std::string config_path;
    std::string protocol;
    std::string eta;
    std::string system;
    std::string reservoir;
    std::string metrics;
    std::string output;
    std::string d;
    std::string delta;
    std::string entropy_unit;
    int reservoir_size = 0;
    int systems = 0;
    uint64_t seed = 0;
    int max_qubits = 0;
};

void add_run_options(CLI::App *cmd, RunOptions &o) {
    cmd->add_option("-c,--config", o.config_path, "key = value config file; flags override it");
    cmd->add_option("--protocol", o.protocol, "pswap or cswap");
    cmd->add_option("--eta", o.eta, "coupling angle in [0, pi/2], e.g. 0.3 or pi/8");
    cmd->add_option("-N,--reservoir-size", o.reservoir_size, "number of reservoir qubits");
    cmd->add_option("-n,--systems", o.systems, "number of system qubits sharing the reservoir");
    cmd->add_option("--system", o.system, "initial system state: zero|one|plus|minus|mixed|x,y,z");
    cmd->add_option("--reservoir", o.reservoir, "reservoir state: zero|one|plus|minus|mixed|x,y,z");
    cmd->add_option("--metrics", o.metrics, "comma list of fidelity, bloch_distance, entropy");
    cmd->add_option("--entropy-unit", o.entropy_unit, "bits (default) or nats");
    cmd->add_option("--seed", o.seed, "seed for randomized runs");
    cmd->add_option("-o,--output", o.output, "output CSV path, '-' for stdout");
    cmd->add_option("--delta", o.delta, "tolerance used for sweep bound columns");
    cmd->add_option("--d", o.d, "initial distance used for sweep bound columns");
    cmd->add_option("--max-qubits", o.max_qubits, "largest full-state register (default 13, env QHOMOG_MAX_QUBITS)");
}

ExperimentConfig build_config(CLI::App *cmd, const RunOptions &o) {
    ExperimentConfig cfg;
    if (const char *env = std::getenv("QHOMOG_MAX_QUBITS"); env && *env) {
        apply_config_value(cfg, "max_qubits", env);
    }
    if (!o.config_path.empty()) {
        for (const auto &[k, v] : read_config_file(o.config_path)) {
            apply_config_value(cfg, k, v);
        }
    }
    auto given = [cmd](const char *name) { return cmd->count(name) > 0; };
    if (given("--protocol")) {
        apply_config_value(cfg, "protocol", o.protocol);
    }
    if (given("--eta")) {
        apply_config_value(cfg, "eta", o.eta);
    }
    if (given("--reservoir-size")) {
        cfg.reservoir_size = o.reservoir_size;
    }
    if (given("--systems")) {
        cfg.systems = o.systems;
    }
    if (given("--system")) {
        apply_config_value(cfg, "system", o.system);
    }
    if (given("--reservoir")) {
        apply_config_value(cfg, "reservoir", o.reservoir);
    }
    if (given("--metrics")) {
        apply_config_value(cfg, "metrics", o.metrics);
    }
    if (given("--entropy-unit")) {
        apply_config_value(cfg, "entropy_unit", o.entropy_unit);
    }
    if (given("--seed")) {
        cfg.seed = o.seed;
    }
    if (given("--output")) {
        cfg.output_path = o.output;
    }
    if (given("--delta")) {
        apply_config_value(cfg, "delta", o.delta);
    }
    if (given("--d")) {
        apply_config_value(cfg, "d", o.d);
    }
    if (given("--max-qubits")) {
        cfg.max_qubits = o.max_qubits;
    }
    cfg.validate();
    return cfg;
}

// Renders into memory first so a failed run never leaves a partial file behind.
void emit(const std::string &path, const std::string &text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error(ErrorKind::Io, "write failed for " + path);
    }
}

struct BoundsOptions {
    std::string mode;
    std::optional<double> delta;
    std::optional<double> Delta;
    double d = 2.0;
    std::optional<std::string> eta;
    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<std::string> scan;
    bool json = false;
};

using Fields = nlohmann::ordered_json;

std::string text_of(const nlohmann::ordered_json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        return format_double(v.get<double>());
    }
    return v.dump();
}

void add_report(Fields &f, const std::string &prefix, const BoundReport &r) {
    f[prefix + "formula"] = std::string(to_string(r.formula));
    f[prefix + "raw_bound"] = r.raw_bound;
    if (r.formula == BoundFormula::ReuseCount) {
        if (r.unbounded) {
            f[prefix + "n_max"] = "inf";
        } else {
            f[prefix + "n_max"] = r.reuse_max;
        }
    } else {
        f[prefix + "N_min"] = r.reservoir_min;
    }
    f[prefix + "s_squared_limit"] = r.s_squared_limit;
    f[prefix + "feasible"] = r.feasible;
    f[prefix + "unbounded"] = r.unbounded;
    if (!r.reason.empty()) {
        f[prefix + "reason"] = r.reason;
    }
}

void print_fields(const Fields &f, bool json) {
    if (json) {
        std::cout << f.dump() << '\n';
        return;
    }
    for (const auto &[k, v] : f.items()) {
        std::cout << k << " = " << text_of(v) << '\n';
    }
}

template <typename T>
T need(const std::optional<T> &v, const char *flag) {
    if (!v) {
        throw Error(ErrorKind::Usage, std::string("missing ") + flag);
    }
    return *v;
}

int run_bounds(const BoundsOptions &o) {
    Fields f = Fields::object();
    bool feasible = true;
    if (o.mode == "single") {
        double delta = need(o.delta, "--delta");
        f["delta"] = delta;
        f["d"] = o.d;
        auto r = min_reservoir_single(delta, o.d);
        add_report(f, "", r);
    } else if (o.mode == "reuse") {
        double Delta = o.Delta ? *o.Delta : need(o.delta, "--Delta");
        double eta = parse_angle(need(o.eta, "--eta"));
        int n = need(o.n, "--n");
        f["Delta"] = Delta;
        f["d"] = o.d;
        f["eta"] = eta;
        f["n"] = n;
        auto a = assess_reuse(Delta, o.d, eta, n);
        add_report(f, "reservoir.", a.reservoir);
        add_report(f, "count.", a.count);
        f["admissible"] = a.admissible;
        feasible = a.admissible;
    } else if (o.mode == "fidelity-gap") {
        if (o.scan) {
            auto parts = parse_axis("eta=" + *o.scan);  // reuse the range parser
            if (parts.values.empty()) {
                throw Error(ErrorKind::Usage, "empty scan range");
            }
            double lo = parts.values.front();
            double hi = parts.values.back();
            double step = parts.values.size() > 1 ? parts.values[1] - parts.values[0] : 1.0;
            auto m = scan_fidelity_gap_bound(lo, hi, step);
            f["scan_points"] = parts.values.size();
            f["max"] = m.value;
            f["argmax_alpha"] = m.argmax;
        }
        if (o.alpha) {
            f["alpha"] = *o.alpha;
            f["bound"] = fidelity_gap_bound(*o.alpha);
            if (o.beta && o.eta) {
                double eta = parse_angle(*o.eta);
                f["beta"] = *o.beta;
                f["eta"] = eta;
                f["intermediate"] = fidelity_gap_intermediate(*o.alpha, *o.beta, eta);
                f["intermediate_consistent"] = fidelity_gap_consistent(*o.alpha, *o.beta, eta);
            }
        }
        if (f.empty()) {
            throw Error(ErrorKind::Usage, "fidelity-gap needs --alpha or --scan lo:hi:step");
        }
    } else {
        throw Error(ErrorKind::Usage, "bounds mode must be single, reuse or fidelity-gap");
    }
    print_fields(f, o.json);
    return feasible ? kExitOk : kExitInfeasible;
}

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::Io ? kExitIo : kExitUsage;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Qubit homogenization simulator: partial-swap and controlled-swap protocols"};
    app.require_subcommand(1);

    RunOptions sim;
    auto *simulate = app.add_subcommand("simulate", "run a protocol and write a CSV trace");
    add_run_options(simulate, sim);

    BoundsOptions bo;
    auto *bounds = app.add_subcommand("bounds", "evaluate resource bounds");
    bounds->add_option("mode", bo.mode, "single | reuse | fidelity-gap")->required();
    bounds->add_option("--delta", bo.delta, "target tolerance delta");
    bounds->add_option("--Delta", bo.Delta, "reuse tolerance Delta");
    bounds->add_option("--d", bo.d, "initial Bloch distance (default 2)");
    bounds->add_option("--eta", bo.eta, "coupling angle");
    bounds->add_option("--n", bo.n, "number of system qubits");
    bounds->add_option("--alpha", bo.alpha, "reservoir Bloch length");
    bounds->add_option("--beta", bo.beta, "system Bloch length");
    bounds->add_option("--scan", bo.scan, "alpha range lo:hi:step");
    bounds->add_flag("--json", bo.json, "machine-readable output");

    std::string scope = "all";
    uint64_t verify_seed = 7;
    auto *verify = app.add_subcommand("verify", "cross-check closed forms against the full-state oracle");
    verify->add_option("scope", scope, "maps | joint | entropy | bounds | all");
    verify->add_option("--seed", verify_seed, "random seed");

    RunOptions sw;
    std::vector<std::string> axes;
    SweepOptions sweep_opts;
    auto *sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
    add_run_options(sweep, sw);
    sweep->add_option("--axis", axes, "name=lo:hi:step or name=v1,v2 over eta, N, n, delta, d");
    sweep->add_option("--max-rows", sweep_opts.max_rows, "grid size cap");
    sweep->add_option("--threads", sweep_opts.threads, "worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*simulate) {
            auto cfg = build_config(simulate, sim);
            auto result = run_simulation(cfg);
            std::ostringstream out;
            write_trace_csv(out, result, cfg.entropy);
            emit(cfg.output_path, out.str());
            return kExitOk;
        }
        if (*bounds) {
            return run_bounds(bo);
        }
        if (*verify) {
            auto report = run_verify(parse_verify_scope(scope), verify_seed);
            print_report(std::cout, report);
            return report.passed() ? kExitOk : kExitVerify;
        }
        if (*sweep) {
            auto cfg = build_config(sweep, sw);
            std::vector<SweepAxis> parsed;
            for (const auto &a : axes) {
                parsed.push_back(parse_axis(a));
            }
            std::ostringstream out;
            run_sweep(cfg, parsed, out, sweep_opts);
            emit(cfg.output_path, out.str());
            return kExitOk;
        }
    } catch (const Error &e) {
        std::cerr << "qhomog: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "qhomog: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
