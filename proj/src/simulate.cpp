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

#include <numbers>
#include <ostream>
#include <vector>

#include "qhomog/error.hpp"
#include "qhomog/experiments.hpp"
#include "qhomog/oracle.hpp"

namespace qhomog {

SimulationResult run_simulation(const ExperimentConfig &config) {
    config.validate();
    CouplingStrength eta(config.eta);
    std::vector<BlochVector> systems(static_cast<size_t>(config.systems), config.system0);
    auto run = homogenize_repeated(systems, config.reservoir0, config.reservoir_size, eta, config.protocol);
    SimulationResult out{std::move(run.passes)};
    if (config.entropy) {
        auto series = joint_entropy_series(config.system0, config.reservoir0, config.reservoir_size, eta,
                                           config.protocol, config.max_qubits);
        auto &steps = out.passes.front().steps;
        for (size_t k = 0; k < steps.size(); k++) {
            steps[k].entropy = config.entropy_unit == LogBase::Nats ? series[k] * std::numbers::ln2 : series[k];
        }
    }
    return out;
}

void write_trace_csv(std::ostream &out, const SimulationResult &result, bool entropy) {
    bool with_pass = result.passes.size() > 1;
    if (with_pass) {
        out << "pass,";
    }
    out << "step,protocol,eta,sys_x,sys_y,sys_z,res_x,res_y,res_z,fidelity,bloch_distance";
    if (entropy) {
        out << ",entropy";
    }
    out << '\n';
    for (size_t p = 0; p < result.passes.size(); p++) {
        const auto &trace = result.passes[p];
        auto proto = to_string(trace.protocol);
        auto eta = format_double(trace.eta);
        for (const auto &r : trace.steps) {
            if (with_pass) {
                out << (p + 1) << ',';
            }
            out << r.step << ',' << proto << ',' << eta << ',' << format_double(r.system.x) << ','
                << format_double(r.system.y) << ',' << format_double(r.system.z) << ','
                << format_double(r.reservoir.x) << ',' << format_double(r.reservoir.y) << ','
                << format_double(r.reservoir.z) << ',' << format_double(r.fidelity) << ','
                << format_double(r.bloch_distance);
            if (entropy) {
                if (!r.entropy) {
                    throw Error(ErrorKind::Configuration, "entropy column requested but not computed");
                }
                out << ',' << format_double(*r.entropy);
            }
            out << '\n';
        }
    }
}

}  // namespace qhomog
