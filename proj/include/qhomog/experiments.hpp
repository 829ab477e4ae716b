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

// Experiment front end shared by the CLI and the Python module: config
// parsing, CSV traces, parameter sweeps and the oracle verification suite.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhomog/quantum_core.hpp"
#include "qhomog/reduced_dynamics.hpp"

namespace qhomog {

struct ExperimentConfig {
    Protocol protocol = Protocol::Cswap;
    double eta = std::numbers::pi / 8;
    int reservoir_size = 20;  // N
    int systems = 1;          // n
    BlochVector system0{0.0, 0.0, 1.0};
    BlochVector reservoir0{1.0, 0.0, 0.0};
    bool entropy = false;  // fidelity and bloch_distance columns are always written
    LogBase entropy_unit = LogBase::Bits;
    uint64_t seed = 0;
    std::string output_path = "-";
    // Bound parameters used by sweeps.
    double delta = 0.1;
    std::optional<double> d;  // defaults to |system0 - reservoir0|
    int max_qubits = kDefaultMaxQubits;

    /// Throws Usage / Configuration on any violated invariant.
    void validate() const;
    double initial_distance() const;
};

/// "zero", "one", "plus", "minus", "mixed" or a Bloch triple "x,y,z".
BlochVector parse_state(std::string_view text);
/// Radians: "0.39", "pi", "pi/8", "3pi/8", "3*pi/8".
double parse_angle(std::string_view text);
/// Parses a nonnegative integer, rejecting trailing junk.
int parse_count(std::string_view text, std::string_view what);

/// Line-oriented `key = value`; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> read_config_file(const std::string &path);
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Known keys: protocol, eta, N, n, system, reservoir, metrics, seed, output,
/// delta, d, max_qubits. Throws Usage for anything else.
void apply_config_value(ExperimentConfig &config, std::string_view key, std::string_view value);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

struct SimulationResult {
    std::vector<HomogenizationTrace> passes;
};

/// Reduced-dynamics run; when config.entropy is set the joint entropy column
/// comes from the full-state oracle (single pass only).
SimulationResult run_simulation(const ExperimentConfig &config);

/// Header `step,protocol,eta,sys_x,...,bloch_distance[,entropy]`, prefixed by
/// a `pass` column when more than one system is simulated.
void write_trace_csv(std::ostream &out, const SimulationResult &result, bool entropy);

struct SweepAxis {
    std::string name;  // eta, N, n, delta, d
    std::vector<double> values;
};

/// "name=lo:hi:step" (inclusive) or "name=v1,v2,...".
SweepAxis parse_axis(std::string_view spec);

struct SweepOptions {
    size_t max_rows = 100000;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// One row per grid point, first axis varying slowest. Output does not depend
/// on the thread count.
void run_sweep(const ExperimentConfig &base, std::span<const SweepAxis> axes, std::ostream &out,
               const SweepOptions &options = {});

enum class VerifyScope { Maps, Joint, Entropy, Bounds, All };

VerifyScope parse_verify_scope(std::string_view name);

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    /// Informational lines: published-vs-oracle discrepancies and other findings.
    std::vector<std::string> notes;

    bool passed() const;
};

VerifyReport run_verify(VerifyScope scope, uint64_t seed);
void print_report(std::ostream &out, const VerifyReport &report);

}  // namespace qhomog
