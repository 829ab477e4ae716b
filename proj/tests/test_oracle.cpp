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

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "naive.hpp"
#include "qhomog/error.hpp"
#include "qhomog/oracle.hpp"
#include "qhomog/sampling.hpp"

using namespace qhomog;

namespace {

double diff(const BlochVector &a, const BlochVector &b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// PSWAP between s (position 0) and reservoir qubit j (position j) of a 1 + N register.
naive::M pswap_on(int j, int qubits, double eta) {
    naive::M id2 = naive::M::Identity(2, 2);
    naive::M x = naive::paulis()[0], y = naive::paulis()[1], z = naive::paulis()[2];
    // SWAP = (1 + X.X + Y.Y + Z.Z) / 2
    naive::M sw = naive::M::Zero(1L << qubits, 1L << qubits);
    for (const naive::M *p : {&id2, &x, &y, &z}) {
        naive::M acc = naive::M::Identity(1, 1);
        for (int q = 0; q < qubits; q++) {
            acc = naive::kron(acc, (q == 0 || q == j) ? *p : id2);
        }
        sw += 0.5 * acc;
    }
    return std::cos(eta) * naive::M::Identity(1L << qubits, 1L << qubits) + naive::C(0, std::sin(eta)) * sw;
}

}  // namespace

TEST_SUITE("full-state-oracle") {
    TEST_CASE("register sizes") {
        CHECK(oracle_register_qubits(1, 5, Protocol::Pswap, ControlMode::TraceEachStep) == 6);
        CHECK(oracle_register_qubits(1, 5, Protocol::Cswap, ControlMode::TraceEachStep) == 7);
        CHECK(oracle_register_qubits(2, 5, Protocol::Cswap, ControlMode::Retain) == 12);
    }

    TEST_CASE("capacity is enforced") {
        OracleOptions small;
        small.max_qubits = 4;
        CHECK_NOTHROW(oracle_single_pass({0, 0, 1}, {1, 0, 0}, 3, CouplingStrength(0.3), Protocol::Pswap, small));
        try {
            oracle_single_pass({0, 0, 1}, {1, 0, 0}, 3, CouplingStrength(0.3), Protocol::Cswap, small);
            FAIL("expected a capacity error");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Capacity);
        }
        CHECK_THROWS_AS(joint_entropy_series({0, 0, 1}, {1, 0, 0}, 20, CouplingStrength(0.3), Protocol::Pswap), Error);
    }

    TEST_CASE("pswap register evolution matches a dense reference") {
        Rng rng(21);
        for (int trial = 0; trial < 5; trial++) {
            BlochVector s = random_bloch(rng);
            BlochVector r = random_bloch(rng);
            double eta = random_eta(rng);
            int N = 3;
            naive::M state = naive::density(s.x, s.y, s.z);
            for (int j = 0; j < N; j++) {
                state = naive::kron(state, naive::density(r.x, r.y, r.z));
            }
            for (int j = 1; j <= N; j++) {
                naive::M u = pswap_on(j, N + 1, eta);
                state = u * state * u.adjoint();
            }
            auto run = oracle_single_pass(s, r, N, CouplingStrength(eta), Protocol::Pswap);
            CHECK((run.state.matrix - state).cwiseAbs().maxCoeff() < 1e-13);
            auto sb = naive::bloch(naive::partial_trace(state, {0}, N + 1));
            CHECK(diff(run.trace.final_record().system, {sb[0], sb[1], sb[2]}) < 1e-13);
        }
    }

    TEST_CASE("oracle and reduced dynamics agree on a fresh reservoir") {
        Rng rng(22);
        for (auto proto : {Protocol::Pswap, Protocol::Cswap}) {
            for (int N = 0; N <= 5; N++) {
                BlochVector s = random_bloch(rng);
                BlochVector r = random_bloch(rng);
                CouplingStrength k(random_eta(rng));
                auto o = oracle_single_pass(s, r, N, k, proto);
                auto m = homogenize_single_pass(s, r, N, k, proto);
                REQUIRE(o.trace.steps.size() == m.steps.size());
                for (size_t i = 0; i < m.steps.size(); i++) {
                    CHECK(diff(o.trace.steps[i].system, m.steps[i].system) < 1e-12);
                    CHECK(diff(o.trace.steps[i].reservoir, m.steps[i].reservoir) < 1e-12);
                }
            }
        }
    }

    TEST_CASE("retained and traced controls implement the same channel") {
        Rng rng(23);
        BlochVector s = random_bloch(rng);
        BlochVector r = random_bloch(rng);
        CouplingStrength k(0.7);
        OracleOptions keep;
        keep.control_mode = ControlMode::Retain;
        auto a = oracle_single_pass(s, r, 3, k, Protocol::Cswap);
        auto b = oracle_single_pass(s, r, 3, k, Protocol::Cswap, keep);
        CHECK((a.state.system_reservoir_marginal() - b.state.system_reservoir_marginal()).cwiseAbs().maxCoeff() < 1e-13);
        CHECK(b.state.index_map.size() == 7);
        CHECK(a.state.index_map.size() == 4);
    }

    TEST_CASE("reservoir qubit 1 under reuse equals the closed form") {
        Rng rng(24);
        for (int i = 0; i < 5; i++) {
            BlochVector s = random_bloch(rng);
            BlochVector r = random_bloch(rng);
            CouplingStrength k(random_eta(rng));
            std::vector<BlochVector> systems(2, s);
            OracleOptions keep;
            keep.control_mode = ControlMode::Retain;
            auto o = oracle_repeated(systems, r, 3, k, Protocol::Cswap, keep);
            CHECK(diff(o.state.bloch({QubitRole::Reservoir, 1}), first_reservoir_after(s, r, k, 2)) < 1e-10);
            CHECK(o.passes.size() == 2);
        }
    }

    TEST_CASE("joint entropy series") {
        CouplingStrength k(std::numbers::pi / 5);
        auto pure = joint_entropy_series({0, 0, 1}, {1, 0, 0}, 4, k, Protocol::Pswap);
        REQUIRE(pure.size() == 5);
        for (double v : pure) {
            CHECK(std::abs(v) < 1e-10);
        }
        BlochVector s{0.2, 0.1, -0.3};
        BlochVector r{0.0, 0.5, 0.4};
        auto p = joint_entropy_series(s, r, 5, k, Protocol::Pswap);
        for (double v : p) {
            CHECK(std::abs(v - p.front()) < 1e-10);
        }
        auto c = joint_entropy_series(s, r, 5, k, Protocol::Cswap);
        for (size_t i = 1; i < c.size(); i++) {
            CHECK(c[i] >= c[i - 1] - 1e-10);
        }
        CHECK(c.back() > c.front() + 1e-3);
    }

    TEST_CASE("single interaction oracle") {
        CouplingStrength k(0.5);
        auto o = oracle_interaction({0, 0, 1}, {0, 0, -1}, k, Protocol::Cswap);
        CHECK(o.joint.rows() == 4);
        REQUIRE(o.reduced.control_out.has_value());
        CHECK(o.reduced.system_out.z == doctest::Approx(k.c2() - k.s2()));
        auto p = oracle_interaction({0, 0, 1}, {0, 0, -1}, k, Protocol::Pswap);
        CHECK_FALSE(p.reduced.control_out.has_value());
    }

    TEST_CASE("full coupling hands the system the first reservoir state") {
        BlochVector s{0.2, -0.4, 0.7};
        BlochVector r{-0.5, 0.1, 0.3};
        auto o = oracle_single_pass(s, r, 3, CouplingStrength{kHalfPi}, Protocol::Cswap);
        CHECK(diff(o.trace.final_record().system, r) < 1e-12);
        CHECK(diff(o.trace.steps[1].reservoir, s) < 1e-12);
    }
}
