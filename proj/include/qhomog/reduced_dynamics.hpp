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

// Single-interaction reduced maps and the Bloch-vector recursions built on
// them. Everything here propagates single-qubit marginals only; the
// full-register check lives in oracle.hpp.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qhomog/gates.hpp"
#include "qhomog/quantum_core.hpp"

namespace qhomog {

enum class Protocol { Pswap, Cswap };

std::string_view to_string(Protocol p);
/// Accepts "pswap" / "cswap"; throws Usage otherwise.
Protocol parse_protocol(std::string_view name);

struct InteractionResult {
    BlochVector system_out;
    BlochVector reservoir_out;
    std::optional<BlochVector> control_out;  // CSWAP only
};

/// Cross-term coefficient kappa in
///   system_out = c^2 system + s^2 reservoir + kappa c s (system x reservoir)
/// as published alongside the protocol (cs/4). Kept for reporting only.
inline constexpr double kPrintedCrossTermCoefficient = 0.25;

/// kappa measured once from a 4x4 conjugation + partial trace. Every PSWAP map
/// in the library uses this value.
double pswap_cross_coefficient();

/// Coefficients of the two coherent corrections to the PSWAP joint state:
///   rho' = c^2 rho(x)xi + s^2 xi(x)rho
///          - wedge c s (b - a).(sigma(x)1 ^ 1(x)sigma)
///          - cross c s (b x a).(sigma(x)1 - 1(x)sigma)
struct PswapJointCoefficients {
    double wedge = 0.0;
    double cross = 0.0;
};

inline constexpr PswapJointCoefficients kPrintedPswapJointCoefficients{1.0 / 8.0, 1.0 / 8.0};

/// Both coefficients fitted from the 4x4 brute-force conjugation.
PswapJointCoefficients pswap_joint_coefficients();

/// Closed-form two-qubit (system (x) reservoir) states after one interaction.
ComplexMatrix cswap_joint_state(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta);
ComplexMatrix pswap_joint_state(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta,
                                const PswapJointCoefficients &coefficients);

/// `control` defaults to a fresh control prepared by control_bloch(eta). Only
/// the z component of the control enters the target maps.
InteractionResult cswap_step(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta,
                             std::optional<BlochVector> control = std::nullopt);
InteractionResult pswap_step(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta);
InteractionResult interaction_step(Protocol protocol, const BlochVector &system, const BlochVector &reservoir,
                                   const CouplingStrength &eta);

struct StepRecord {
    int step = 0;
    int reservoir_index = 0;  // 1-based reservoir qubit touched at this step; 0 for the initial record
    BlochVector system;
    BlochVector reservoir;  // state of the touched reservoir qubit after the step
    double fidelity = 0.0;        // F(system, target)
    double bloch_distance = 0.0;  // |system - target|
    std::optional<double> entropy;
};

/// Per-interaction time series of one system qubit's pass through the reservoir.
struct HomogenizationTrace {
    Protocol protocol = Protocol::Cswap;
    double eta = 0.0;
    BlochVector target;
    std::vector<StepRecord> steps;  // steps[k].step == k

    const StepRecord &final_record() const {
        return steps.back();
    }
};

StepRecord make_record(int step, int reservoir_index, const BlochVector &system, const BlochVector &reservoir,
                       const BlochVector &target);

/// N identical reservoir qubits plus the number of interactions each has had.
class ReservoirState {
   public:
    ReservoirState(int size, const BlochVector &initial);

    int size() const {
        return static_cast<int>(qubits_.size());
    }
    /// 1-based, matching the protocol diagram.
    const BlochVector &qubit(int index) const;
    int interactions(int index) const;
    void record_interaction(int index, const BlochVector &state);
    const std::vector<BlochVector> &qubits() const {
        return qubits_;
    }

   private:
    std::vector<BlochVector> qubits_;
    std::vector<int> counters_;
};

HomogenizationTrace homogenize_single_pass(const BlochVector &system0, const BlochVector &reservoir0, int reservoir_size,
                                           const CouplingStrength &eta, Protocol protocol);

struct RepeatedHomogenization {
    std::vector<HomogenizationTrace> passes;
    ReservoirState reservoir;
    std::vector<BlochVector> controls;  // CSWAP only, index c-1 for control c
};

/// Control qubit (1-based) moderating system `pass` and reservoir qubit `j`.
/// Within a pass every control is used once; across passes a control never
/// meets the same reservoir qubit twice as long as passes <= reservoir_size.
int control_for(int pass, int reservoir_qubit, int reservoir_size);

/// Sends each system through the reservoir in qubit order 1..N, reusing the
/// degraded reservoir. Throws Configuration for CSWAP with N < n.
RepeatedHomogenization homogenize_repeated(std::span<const BlochVector> systems0, const BlochVector &reservoir0,
                                           int reservoir_size, const CouplingStrength &eta, Protocol protocol);

/// CSWAP system state after k interactions with fresh reservoir qubits.
BlochVector cswap_system_after(const BlochVector &system0, const BlochVector &reservoir0, const CouplingStrength &eta,
                               int k);

/// First reservoir qubit after n identical fresh systems.
BlochVector first_reservoir_after(const BlochVector &system0, const BlochVector &reservoir0,
                                  const CouplingStrength &eta, int n);

}  // namespace qhomog
