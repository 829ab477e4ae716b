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

// Brute-force density-matrix simulation of the whole register. Used to check
// the reduced maps in reduced_dynamics.hpp; nothing here uses those maps.

#pragma once

#include <span>
#include <vector>

#include "qhomog/gates.hpp"
#include "qhomog/quantum_core.hpp"
#include "qhomog/reduced_dynamics.hpp"

namespace qhomog {

enum class ControlMode {
    /// Each CSWAP gets a fresh control qubit that is traced out right after the
    /// gate. Costs one transient qubit on top of systems + reservoir.
    TraceEachStep,
    /// Controls c1..cN stay in the register; reuse passes follow control_for().
    Retain,
};

struct RegisterState {
    ComplexMatrix matrix;
    QubitIndexMap index_map;

    /// Reduced state on `labels`, ordered by register position.
    ComplexMatrix reduced(std::span<const QubitLabel> labels) const;
    BlochVector bloch(const QubitLabel &label) const;
    /// Marginal on every system and reservoir qubit (controls traced out).
    ComplexMatrix system_reservoir_marginal() const;
};

struct OracleOptions {
    ControlMode control_mode = ControlMode::TraceEachStep;
    int max_qubits = kDefaultMaxQubits;
    bool record_entropy = false;  // joint system+reservoir entropy per step, in bits
};

struct OracleRun {
    RegisterState state;
    HomogenizationTrace trace;
};

struct OracleRepeatedRun {
    RegisterState state;
    std::vector<HomogenizationTrace> passes;
};

/// Qubits the oracle needs at its widest point.
int oracle_register_qubits(int systems, int reservoir_size, Protocol protocol, ControlMode mode);

OracleRun oracle_single_pass(const BlochVector &system0, const BlochVector &reservoir0, int reservoir_size,
                             const CouplingStrength &eta, Protocol protocol, const OracleOptions &options = {});

OracleRepeatedRun oracle_repeated(std::span<const BlochVector> systems0, const BlochVector &reservoir0,
                                  int reservoir_size, const CouplingStrength &eta, Protocol protocol,
                                  const OracleOptions &options = {});

/// S(system + reservoir) in bits for k = 0..N; controls traced out.
std::vector<double> joint_entropy_series(const BlochVector &system0, const BlochVector &reservoir0, int reservoir_size,
                                         const CouplingStrength &eta, Protocol protocol,
                                         int max_qubits = kDefaultMaxQubits);

/// One interaction on a bare (control,) system, reservoir register.
struct OracleInteraction {
    ComplexMatrix joint;  // system (x) reservoir, control traced out
    InteractionResult reduced;
};

OracleInteraction oracle_interaction(const BlochVector &system, const BlochVector &reservoir,
                                     const CouplingStrength &eta, Protocol protocol);

}  // namespace qhomog
