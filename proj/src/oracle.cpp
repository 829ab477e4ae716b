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

#include "qhomog/oracle.hpp"

#include <array>
#include <string>

#include "qhomog/error.hpp"

namespace qhomog {

namespace {

QubitLabel sys(int i) {
    return {QubitRole::System, i};
}
QubitLabel res(int j) {
    return {QubitRole::Reservoir, j};
}
QubitLabel ctl(int c) {
    return {QubitRole::Control, c};
}

class Register {
   public:
    Register(std::span<const BlochVector> systems, const BlochVector &reservoir0, int reservoir_size,
             const CouplingStrength &eta, bool with_controls, int max_qubits)
        : max_qubits_(max_qubits) {
        std::vector<QubitLabel> labels;
        std::vector<ComplexMatrix> factors;
        for (size_t i = 0; i < systems.size(); i++) {
            labels.push_back(sys(static_cast<int>(i) + 1));
            factors.push_back(bloch_to_density(systems[i]));
        }
        for (int j = 1; j <= reservoir_size; j++) {
            labels.push_back(res(j));
            factors.push_back(bloch_to_density(reservoir0));
        }
        if (with_controls) {
            for (int c = 1; c <= reservoir_size; c++) {
                labels.push_back(ctl(c));
                factors.push_back(control_state(eta));
            }
        }
        state_.index_map = QubitIndexMap(std::move(labels));
        state_.matrix = kron_all(factors, max_qubits_);
    }

    int pos(const QubitLabel &l) const {
        return static_cast<int>(state_.index_map.position(l));
    }

    void pswap_step(int i, int j, const CouplingStrength &eta) {
        std::array<int, 2> t{pos(sys(i)), pos(res(j))};
        state_.matrix = apply_unitary(state_.matrix, pswap(eta), t);
    }

    void cswap_retained(int i, int j, int c) {
        std::array<int, 3> t{pos(ctl(c)), pos(sys(i)), pos(res(j))};
        state_.matrix = apply_unitary(state_.matrix, cswap(), t);
    }

    // Append a fresh control as the last qubit, apply the Fredkin gate, trace it out.
    void cswap_transient(int i, int j, const CouplingStrength &eta) {
        int n = static_cast<int>(state_.index_map.size());
        ComplexMatrix widened = kron(state_.matrix, control_state(eta), max_qubits_);
        std::array<int, 3> t{n, pos(sys(i)), pos(res(j))};
        widened = apply_unitary(widened, cswap(), t);
        std::vector<int> keep(static_cast<size_t>(n));
        for (int q = 0; q < n; q++) {
            keep[static_cast<size_t>(q)] = q;
        }
        state_.matrix = partial_trace(widened, keep);
    }

    const RegisterState &state() const {
        return state_;
    }
    RegisterState release() {
        return std::move(state_);
    }

   private:
    int max_qubits_;
    RegisterState state_;
};

}  // namespace

ComplexMatrix RegisterState::reduced(std::span<const QubitLabel> labels) const {
    std::vector<int> keep;
    keep.reserve(labels.size());
    for (const auto &l : labels) {
        keep.push_back(static_cast<int>(index_map.position(l)));
    }
    return partial_trace(matrix, keep);
}

BlochVector RegisterState::bloch(const QubitLabel &label) const {
    std::array<QubitLabel, 1> one{label};
    return density_to_bloch(reduced(one));
}

ComplexMatrix RegisterState::system_reservoir_marginal() const {
    std::vector<QubitLabel> keep;
    for (const auto &l : index_map.labels()) {
        if (l.role != QubitRole::Control) {
            keep.push_back(l);
        }
    }
    if (keep.size() == index_map.size()) {
        return matrix;
    }
    return reduced(keep);
}

int oracle_register_qubits(int systems, int reservoir_size, Protocol protocol, ControlMode mode) {
    if (protocol == Protocol::Pswap) {
        return systems + reservoir_size;
    }
    if (mode == ControlMode::Retain) {
        return systems + 2 * reservoir_size;
    }
    return systems + reservoir_size + (reservoir_size > 0 ? 1 : 0);
}

OracleRepeatedRun oracle_repeated(std::span<const BlochVector> systems0, const BlochVector &reservoir0,
                                  int reservoir_size, const CouplingStrength &eta, Protocol protocol,
                                  const OracleOptions &options) {
    if (systems0.empty()) {
        throw Error(ErrorKind::Configuration, "at least one system qubit is required");
    }
    if (reservoir_size < 0) {
        throw Error(ErrorKind::Configuration, "reservoir size must be nonnegative");
    }
    auto n = static_cast<int>(systems0.size());
    bool retain = protocol == Protocol::Cswap && options.control_mode == ControlMode::Retain;
    if (retain && n > 1 && reservoir_size < n) {
        throw Error(ErrorKind::Configuration, "cswap control reuse needs N >= n");
    }
    int width = oracle_register_qubits(n, reservoir_size, protocol, options.control_mode);
    if (width > options.max_qubits) {
        throw Error(ErrorKind::Capacity, "oracle needs " + std::to_string(width) + " qubits, cap is " +
                                             std::to_string(options.max_qubits));
    }

    Register reg(systems0, reservoir0, reservoir_size, eta, retain, options.max_qubits);
    OracleRepeatedRun out;
    for (int i = 1; i <= n; i++) {
        HomogenizationTrace trace;
        trace.protocol = protocol;
        trace.eta = eta.eta();
        trace.target = reservoir0;
        auto record = [&](int k, int j) {
            const auto &st = reg.state();
            BlochVector s = st.bloch(sys(i));
            BlochVector r = j > 0 ? st.bloch(res(j)) : reservoir0;
            auto rec = make_record(k, j, s, r, reservoir0);
            if (options.record_entropy) {
                rec.entropy = von_neumann_entropy(st.system_reservoir_marginal());
            }
            trace.steps.push_back(rec);
        };
        record(0, 0);
        for (int j = 1; j <= reservoir_size; j++) {
            if (protocol == Protocol::Pswap) {
                reg.pswap_step(i, j, eta);
            } else if (retain) {
                reg.cswap_retained(i, j, control_for(i, j, reservoir_size));
            } else {
                reg.cswap_transient(i, j, eta);
            }
            record(j, j);
        }
        out.passes.push_back(std::move(trace));
    }
    out.state = reg.release();
    return out;
}

OracleRun oracle_single_pass(const BlochVector &system0, const BlochVector &reservoir0, int reservoir_size,
                             const CouplingStrength &eta, Protocol protocol, const OracleOptions &options) {
    std::array<BlochVector, 1> systems{system0};
    auto run = oracle_repeated(systems, reservoir0, reservoir_size, eta, protocol, options);
    return {std::move(run.state), std::move(run.passes.front())};
}

std::vector<double> joint_entropy_series(const BlochVector &system0, const BlochVector &reservoir0, int reservoir_size,
                                         const CouplingStrength &eta, Protocol protocol, int max_qubits) {
    OracleOptions opts;
    opts.max_qubits = max_qubits;
    opts.record_entropy = true;
    auto run = oracle_single_pass(system0, reservoir0, reservoir_size, eta, protocol, opts);
    std::vector<double> out;
    out.reserve(run.trace.steps.size());
    for (const auto &rec : run.trace.steps) {
        out.push_back(*rec.entropy);
    }
    return out;
}

OracleInteraction oracle_interaction(const BlochVector &system, const BlochVector &reservoir,
                                     const CouplingStrength &eta, Protocol protocol) {
    OracleInteraction out;
    ComplexMatrix targets = kron(bloch_to_density(system), bloch_to_density(reservoir));
    std::array<int, 1> first{0};
    std::array<int, 1> second{1};
    if (protocol == Protocol::Pswap) {
        std::array<int, 2> t{0, 1};
        out.joint = apply_unitary(targets, pswap(eta), t);
    } else {
        ComplexMatrix full = kron(control_state(eta), targets);
        std::array<int, 3> t{0, 1, 2};
        full = apply_unitary(full, cswap(), t);
        std::array<int, 2> sr{1, 2};
        out.joint = partial_trace(full, sr);
        out.reduced.control_out = density_to_bloch(partial_trace(full, first));
    }
    out.reduced.system_out = density_to_bloch(partial_trace(out.joint, first));
    out.reduced.reservoir_out = density_to_bloch(partial_trace(out.joint, second));
    return out;
}

}  // namespace qhomog
