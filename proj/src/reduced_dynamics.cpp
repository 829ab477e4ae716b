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

#include "qhomog/reduced_dynamics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qhomog/error.hpp"

namespace qhomog {

namespace {

std::array<ComplexMatrix, 3> paulis() {
    return {pauli_x(), pauli_y(), pauli_z()};
}

// (sigma(x)1 ^ 1(x)sigma)_i = eps_ijk sigma_j (x) sigma_k
std::array<ComplexMatrix, 3> wedge_operators() {
    auto p = paulis();
    std::array<ComplexMatrix, 3> w;
    for (int i = 0; i < 3; i++) {
        int j = (i + 1) % 3;
        int k = (i + 2) % 3;
        w[i] = kron(p[j], p[k]) - kron(p[k], p[j]);
    }
    return w;
}

std::array<ComplexMatrix, 3> difference_operators() {
    auto p = paulis();
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    std::array<ComplexMatrix, 3> v;
    for (int i = 0; i < 3; i++) {
        v[i] = kron(p[i], id) - kron(id, p[i]);
    }
    return v;
}

ComplexMatrix dot_operators(const BlochVector &b, const std::array<ComplexMatrix, 3> &ops) {
    return b.x * ops[0] + b.y * ops[1] + b.z * ops[2];
}

// Fixed, well-conditioned calibration input: non-parallel mixed states and an
// intermediate coupling so both corrections are far from zero.
struct Calibration {
    BlochVector system{0.6, -0.2, 0.5};
    BlochVector reservoir{-0.1, 0.4, -0.7};
    CouplingStrength eta{0.61};
};

ComplexMatrix brute_force_pswap_joint(const Calibration &cal) {
    ComplexMatrix rho = kron(bloch_to_density(cal.system), bloch_to_density(cal.reservoir));
    std::array<int, 2> targets{0, 1};
    return apply_unitary(rho, pswap(cal.eta), targets);
}

double real_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a.adjoint() * b).trace().real();
}

}  // namespace

std::string_view to_string(Protocol p) {
    return p == Protocol::Pswap ? "pswap" : "cswap";
}

Protocol parse_protocol(std::string_view name) {
    if (name == "pswap") {
        return Protocol::Pswap;
    }
    if (name == "cswap") {
        return Protocol::Cswap;
    }
    throw Error(ErrorKind::Usage, "unknown protocol '" + std::string(name) + "' (expected pswap or cswap)");
}

double pswap_cross_coefficient() {
    static const double kappa = [] {
        Calibration cal;
        ComplexMatrix joint = brute_force_pswap_joint(cal);
        std::array<int, 1> keep{0};
        BlochVector out = density_to_bloch(partial_trace(joint, keep));
        BlochVector residual = out - cal.eta.c2() * cal.system - cal.eta.s2() * cal.reservoir;
        BlochVector direction = (cal.eta.c() * cal.eta.s()) * cal.system.cross(cal.reservoir);
        return residual.dot(direction) / direction.dot(direction);
    }();
    return kappa;
}

PswapJointCoefficients pswap_joint_coefficients() {
    static const PswapJointCoefficients fitted = [] {
        Calibration cal;
        ComplexMatrix rho = bloch_to_density(cal.system);
        ComplexMatrix xi = bloch_to_density(cal.reservoir);
        ComplexMatrix residual = brute_force_pswap_joint(cal) - cal.eta.c2() * kron(rho, xi) - cal.eta.s2() * kron(xi, rho);
        double cs = cal.eta.c() * cal.eta.s();
        ComplexMatrix t1 = -cs * dot_operators(cal.system - cal.reservoir, wedge_operators());
        ComplexMatrix t2 = -cs * dot_operators(cal.system.cross(cal.reservoir), difference_operators());
        // Least squares in the Hilbert-Schmidt inner product.
        Eigen::Matrix2d gram;
        gram << real_inner(t1, t1), real_inner(t1, t2), real_inner(t2, t1), real_inner(t2, t2);
        Eigen::Vector2d rhs(real_inner(t1, residual), real_inner(t2, residual));
        Eigen::Vector2d sol = gram.ldlt().solve(rhs);
        return PswapJointCoefficients{sol(0), sol(1)};
    }();
    return fitted;
}

ComplexMatrix cswap_joint_state(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta) {
    ComplexMatrix rho = bloch_to_density(system);
    ComplexMatrix xi = bloch_to_density(reservoir);
    return eta.c2() * kron(rho, xi) + eta.s2() * kron(xi, rho);
}

ComplexMatrix pswap_joint_state(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta,
                                const PswapJointCoefficients &coefficients) {
    double cs = eta.c() * eta.s();
    return cswap_joint_state(system, reservoir, eta) -
           coefficients.wedge * cs * dot_operators(system - reservoir, wedge_operators()) -
           coefficients.cross * cs * dot_operators(system.cross(reservoir), difference_operators());
}

InteractionResult cswap_step(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta,
                             std::optional<BlochVector> control) {
    validate_bloch(system);
    validate_bloch(reservoir);
    BlochVector ctrl = control.value_or(control_bloch(eta));
    validate_bloch(ctrl);
    // The target maps depend on the control only through c_z = c^2 - s^2.
    double pz = 0.5 * (1.0 + ctrl.z);
    double px = 0.5 * (1.0 - ctrl.z);
    double overlap = 0.5 * (1.0 + reservoir.dot(system));
    InteractionResult out;
    out.system_out = pz * system + px * reservoir;
    out.reservoir_out = pz * reservoir + px * system;
    out.control_out = BlochVector{ctrl.x * overlap, ctrl.y * overlap, ctrl.z};
    return out;
}

InteractionResult pswap_step(const BlochVector &system, const BlochVector &reservoir, const CouplingStrength &eta) {
    validate_bloch(system);
    validate_bloch(reservoir);
    BlochVector cross = (pswap_cross_coefficient() * eta.c() * eta.s()) * system.cross(reservoir);
    InteractionResult out;
    out.system_out = eta.c2() * system + eta.s2() * reservoir + cross;
    out.reservoir_out = eta.c2() * reservoir + eta.s2() * system - cross;
    return out;
}

InteractionResult interaction_step(Protocol protocol, const BlochVector &system, const BlochVector &reservoir,
                                   const CouplingStrength &eta) {
    return protocol == Protocol::Pswap ? pswap_step(system, reservoir, eta) : cswap_step(system, reservoir, eta);
}

StepRecord make_record(int step, int reservoir_index, const BlochVector &system, const BlochVector &reservoir,
                       const BlochVector &target) {
    StepRecord r;
    r.step = step;
    r.reservoir_index = reservoir_index;
    r.system = system;
    r.reservoir = reservoir;
    r.fidelity = fidelity(system, target);
    r.bloch_distance = bloch_distance(system, target);
    return r;
}

ReservoirState::ReservoirState(int size, const BlochVector &initial) {
    if (size < 0) {
        throw Error(ErrorKind::Configuration, "reservoir size must be nonnegative");
    }
    validate_bloch(initial);
    qubits_.assign(static_cast<size_t>(size), initial);
    counters_.assign(static_cast<size_t>(size), 0);
}

const BlochVector &ReservoirState::qubit(int index) const {
    if (index < 1 || index > size()) {
        throw Error(ErrorKind::Index, "reservoir qubit " + std::to_string(index) + " out of range");
    }
    return qubits_[static_cast<size_t>(index - 1)];
}

int ReservoirState::interactions(int index) const {
    qubit(index);
    return counters_[static_cast<size_t>(index - 1)];
}

void ReservoirState::record_interaction(int index, const BlochVector &state) {
    qubit(index);
    qubits_[static_cast<size_t>(index - 1)] = state;
    counters_[static_cast<size_t>(index - 1)]++;
}

HomogenizationTrace homogenize_single_pass(const BlochVector &system0, const BlochVector &reservoir0, int reservoir_size,
                                           const CouplingStrength &eta, Protocol protocol) {
    std::array<BlochVector, 1> systems{system0};
    return homogenize_repeated(systems, reservoir0, reservoir_size, eta, protocol).passes.front();
}

int control_for(int pass, int reservoir_qubit, int reservoir_size) {
    if (reservoir_size < 1 || pass < 1 || reservoir_qubit < 1 || reservoir_qubit > reservoir_size) {
        throw Error(ErrorKind::Index, "control assignment out of range");
    }
    return (reservoir_qubit - 1 + pass - 1) % reservoir_size + 1;
}

RepeatedHomogenization homogenize_repeated(std::span<const BlochVector> systems0, const BlochVector &reservoir0,
                                           int reservoir_size, const CouplingStrength &eta, Protocol protocol) {
    if (systems0.empty()) {
        throw Error(ErrorKind::Configuration, "at least one system qubit is required");
    }
    if (reservoir_size < 0) {
        throw Error(ErrorKind::Configuration, "reservoir size must be nonnegative");
    }
    auto n = static_cast<int>(systems0.size());
    if (protocol == Protocol::Cswap && n > 1 && reservoir_size < n) {
        throw Error(ErrorKind::Configuration, "cswap reuse needs N >= n (N=" + std::to_string(reservoir_size) +
                                                  ", n=" + std::to_string(n) + ") so controls never repeat");
    }

    RepeatedHomogenization out{{}, ReservoirState(reservoir_size, reservoir0), {}};
    if (protocol == Protocol::Cswap) {
        out.controls.assign(static_cast<size_t>(reservoir_size), control_bloch(eta));
    }
    for (int pass = 1; pass <= n; pass++) {
        BlochVector system = systems0[static_cast<size_t>(pass - 1)];
        validate_bloch(system);
        HomogenizationTrace trace;
        trace.protocol = protocol;
        trace.eta = eta.eta();
        trace.target = reservoir0;
        trace.steps.reserve(static_cast<size_t>(reservoir_size) + 1);
        trace.steps.push_back(make_record(0, 0, system, reservoir0, reservoir0));
        for (int j = 1; j <= reservoir_size; j++) {
            InteractionResult r;
            if (protocol == Protocol::Cswap) {
                auto &ctrl = out.controls[static_cast<size_t>(control_for(pass, j, reservoir_size) - 1)];
                r = cswap_step(system, out.reservoir.qubit(j), eta, ctrl);
                ctrl = *r.control_out;
            } else {
                r = pswap_step(system, out.reservoir.qubit(j), eta);
            }
            system = r.system_out;
            out.reservoir.record_interaction(j, r.reservoir_out);
            trace.steps.push_back(make_record(j, j, system, r.reservoir_out, reservoir0));
        }
        out.passes.push_back(std::move(trace));
    }
    return out;
}

BlochVector cswap_system_after(const BlochVector &system0, const BlochVector &reservoir0, const CouplingStrength &eta,
                               int k) {
    double ck = std::pow(eta.c2(), k);
    return ck * system0 + (1.0 - ck) * reservoir0;
}

BlochVector first_reservoir_after(const BlochVector &system0, const BlochVector &reservoir0,
                                  const CouplingStrength &eta, int n) {
    double cn = std::pow(eta.c2(), n);
    return (1.0 - cn) * system0 + cn * reservoir0;
}

}  // namespace qhomog
