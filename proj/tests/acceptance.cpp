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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhomog/bounds.hpp"
#include "qhomog/oracle.hpp"
#include "qhomog/reduced_dynamics.hpp"
#include "qhomog/sampling.hpp"

using namespace qhomog;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double entrywise(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double entrywise(const BlochVector &a, const BlochVector &b) {
    return entrywise(bloch_to_density(a), bloch_to_density(b));
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome oracle_maps() {
    Rng rng(101);
    double worst = 0.0;
    for (auto protocol : {Protocol::Pswap, Protocol::Cswap}) {
        for (int i = 0; i < 50; i++) {
            BlochVector b = random_bloch(rng);
            BlochVector a = random_bloch(rng);
            CouplingStrength eta(random_eta(rng));
            auto reduced = interaction_step(protocol, b, a, eta);
            auto oracle = oracle_interaction(b, a, eta, protocol);
            std::array<int, 1> first{0};
            std::array<int, 1> second{1};
            worst = std::max(worst, entrywise(bloch_to_density(reduced.system_out), partial_trace(oracle.joint, first)));
            worst = std::max(worst, entrywise(bloch_to_density(reduced.reservoir_out), partial_trace(oracle.joint, second)));
        }
    }
    return {worst <= 1e-12, "max entrywise deviation " + sci(worst) + " (tol 1e-12)"};
}

Outcome joint_states() {
    Rng rng(102);
    auto fitted = pswap_joint_coefficients();
    double table1 = 0.0;
    double table2 = 0.0;
    double printed = 0.0;
    for (int i = 0; i < 50; i++) {
        BlochVector b = random_bloch(rng);
        BlochVector a = random_bloch(rng);
        CouplingStrength eta(random_eta(rng));
        table1 = std::max(table1, entrywise(cswap_joint_state(b, a, eta), oracle_interaction(b, a, eta, Protocol::Cswap).joint));
        auto joint = oracle_interaction(b, a, eta, Protocol::Pswap).joint;
        table2 = std::max(table2, entrywise(pswap_joint_state(b, a, eta, fitted), joint));
        printed = std::max(printed, entrywise(pswap_joint_state(b, a, eta, kPrintedPswapJointCoefficients), joint));
    }
    return {table1 <= 1e-12 && table2 <= 1e-12,
            "cswap " + sci(table1) + ", pswap " + sci(table2) + " with coefficients (" + sci(fitted.wedge) + ", " +
                sci(fitted.cross) + "); printed cs/4 and 1/8 coefficients give " + sci(printed) +
                "; cross-term coefficient from oracle " + sci(pswap_cross_coefficient())};
}

Outcome single_use() {
    auto b = min_reservoir_single(0.1, 2.0);
    CouplingStrength eta(std::asin(std::sqrt(0.05)));
    BlochVector rho{0, 0, 1};
    BlochVector xi{0, 0, -1};
    auto run = homogenize_single_pass(rho, xi, 59, eta, Protocol::Cswap);
    double d_sys = run.final_record().bloch_distance;
    double d_res = bloch_distance(run.steps[1].reservoir, xi);
    double d_short = homogenize_single_pass(rho, xi, 58, eta, Protocol::Cswap).final_record().bloch_distance;
    // s^2 = delta/d makes D(xi_1) = delta exactly; allow rounding at that equality.
    constexpr double kSlack = 1e-12;
    bool ok = b.reservoir_min == 59 && d_sys <= 0.1 + kSlack && d_res <= 0.1 + kSlack && d_short > 0.1;
    return {ok, "N_min " + std::to_string(b.reservoir_min) + ", D(rho_59) " + sci(d_sys) + ", D(xi_1) - 0.1 = " + sci(d_res - 0.1) +
                    ", D(rho_58) " + sci(d_short)};
}

Outcome gap_maximum() {
    auto m = scan_fidelity_gap_bound(0.0, 1.0, 1e-4);
    bool ok = m.value >= 0.0203 && m.value <= 0.0213 && m.argmax >= 0.79 && m.argmax <= 0.82;
    return {ok, "max " + sci(m.value) + " at alpha " + sci(m.argmax)};
}

Outcome degenerate_fidelities() {
    Rng rng(105);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::array<double, 4> worst{};
    for (int i = 0; i < 100; i++) {
        double eta = random_eta(rng);
        BlochVector dir = random_pure_bloch(rng);
        BlochVector other = random_bloch(rng);
        auto gap = [&](const BlochVector &s, const BlochVector &r) {
            auto f = fidelity_pair(s, r, eta);
            return std::abs(f.incoherent - f.coherent);
        };
        worst[0] = std::max(worst[0], gap(other, dir));                                  // |alpha| = 1
        worst[1] = std::max(worst[1], gap(unit(rng) * dir, (2 * unit(rng) - 1) * dir));  // parallel
        worst[2] = std::max(worst[2], gap({0, 0, 0}, other));                            // beta = 0
        worst[3] = std::max(worst[3], gap(other, {0, 0, 0}));                            // alpha = 0
    }
    double m = *std::max_element(worst.begin(), worst.end());
    return {m <= 1e-12, "max |F_inc - F_coh| per case " + sci(worst[0]) + ", " + sci(worst[1]) + ", " + sci(worst[2]) +
                            ", " + sci(worst[3])};
}

Outcome convergence() {
    CouplingStrength eta(std::numbers::pi / 4);
    BlochVector zero{0, 0, 1};
    BlochVector plus{1, 0, 0};
    auto inc = homogenize_single_pass(zero, plus, 20, eta, Protocol::Cswap);
    auto coh = homogenize_single_pass(zero, plus, 20, eta, Protocol::Pswap);
    bool monotone = true;
    double worst_ratio = 0.0;
    for (size_t k = 0; k < inc.steps.size(); k++) {
        if (k > 0) {
            monotone = monotone && inc.steps[k].fidelity >= inc.steps[k - 1].fidelity &&
                       coh.steps[k].fidelity >= coh.steps[k - 1].fidelity;
        }
        worst_ratio = std::max(worst_ratio, std::abs(inc.steps[k].fidelity - coh.steps[k].fidelity) / inc.steps[k].fidelity);
    }
    double f_inc = inc.final_record().fidelity;
    double f_coh = coh.final_record().fidelity;
    bool ok = monotone && f_inc >= 0.99 && f_coh >= 0.99 && worst_ratio <= 0.021;
    return {ok, std::string(monotone ? "monotone" : "NOT monotone") + ", final F " + sci(f_inc) + " / " + sci(f_coh) +
                    ", max relative gap " + sci(worst_ratio)};
}

Outcome planarity() {
    Rng rng(107);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_y = 0.0;
    for (int i = 0; i < 20; i++) {
        double t1 = angle(rng), t2 = angle(rng);
        BlochVector s{unit(rng) * std::cos(t1), 0, unit(rng) * std::sin(t1)};
        BlochVector r{unit(rng) * std::cos(t2), 0, unit(rng) * std::sin(t2)};
        auto trace = homogenize_single_pass(s, r, 20, CouplingStrength(random_eta(rng)), Protocol::Cswap);
        for (const auto &rec : trace.steps) {
            worst_y = std::max(worst_y, std::abs(rec.system.y));
        }
    }
    auto p = homogenize_single_pass({0, 0, 1}, {1, 0, 0}, 20, CouplingStrength(std::numbers::pi / 4), Protocol::Pswap);
    double max_y = 0.0;
    for (const auto &rec : p.steps) {
        max_y = std::max(max_y, std::abs(rec.system.y));
    }
    return {worst_y <= 1e-12 && max_y > 1e-6, "cswap max |sys_y| " + sci(worst_y) + ", pswap max |sys_y| " + sci(max_y)};
}

Outcome entropy() {
    Rng rng(108);
    double drift = 0.0;
    double drop = 0.0;
    for (int i = 0; i < 3; i++) {
        BlochVector s = random_bloch(rng);
        BlochVector r = random_bloch(rng);
        CouplingStrength eta(random_eta(rng));
        auto p = joint_entropy_series(s, r, 6, eta, Protocol::Pswap);
        for (double v : p) {
            drift = std::max(drift, std::abs(v - p.front()));
        }
        auto c = joint_entropy_series(s, r, 6, eta, Protocol::Cswap);
        for (size_t k = 1; k < c.size(); k++) {
            drop = std::max(drop, c[k - 1] - c[k]);
        }
    }
    BlochVector zero{0, 0, 1};
    BlochVector plus{1, 0, 0};
    auto strong = joint_entropy_series(zero, plus, 6, CouplingStrength(3 * std::numbers::pi / 8), Protocol::Cswap);
    auto weak = joint_entropy_series(zero, plus, 6, CouplingStrength(std::numbers::pi / 8), Protocol::Cswap);
    auto plateau = [](const std::vector<double> &s) {
        for (size_t k = 1; k < s.size(); k++) {
            bool flat = true;
            for (size_t j = k; j < s.size(); j++) {
                flat = flat && std::abs(s[j] - s[j - 1]) < 1e-3;
            }
            if (flat) {
                return static_cast<int>(k);
            }
        }
        return static_cast<int>(s.size());
    };
    int ps = plateau(strong);
    int pw = plateau(weak);
    bool ok = drift <= 1e-10 && drop <= 1e-10 && ps < pw && strong.back() < weak.back();
    return {ok, "pswap drift " + sci(drift) + ", cswap max drop " + sci(std::max(0.0, drop)) + ", plateau step " +
                    std::to_string(ps) + " vs " + std::to_string(pw) + ", final " + sci(strong.back()) + " vs " +
                    sci(weak.back())};
}

Outcome reuse() {
    // Flooring at the boundary coupling.
    bool flooring = true;
    for (double Delta : {0.05, 0.1, 0.2, 0.4}) {
        for (int n = 1; n <= 6; n++) {
            double eta = std::acos(std::pow(1.0 - Delta / 2.0, 0.5 / n));
            flooring = flooring && max_reuse_count(Delta, 2.0, eta).reuse_max == n &&
                       max_reuse_count(Delta, 2.0, eta * 1.001).reuse_max == n - 1;
        }
    }
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> u(1e-4, 1.99);
    bool reduces = true;
    for (int i = 0; i < 100; i++) {
        double Delta = u(rng);
        reduces = reduces && min_reservoir_reuse(Delta, 2.0, 0.3, 1).reservoir_min ==
                                 min_reservoir_single(Delta, 2.0).reservoir_min;
    }
    BlochVector rho{0, 0, 1};
    BlochVector xi{0, 0, -1};
    // Largest distance from xi minus Delta over every system and reservoir qubit, or nullopt if not reported feasible.
    auto excess_at = [&](double eta, double Delta, int n) -> std::optional<double> {
        auto a = assess_reuse(Delta, 2.0, eta, n);
        int N = a.reservoir.reservoir_min;
        if (!a.admissible || N < n) {
            return std::nullopt;
        }
        std::vector<BlochVector> systems(static_cast<size_t>(n), rho);
        auto run = homogenize_repeated(systems, xi, N, CouplingStrength(eta), Protocol::Cswap);
        double excess = -1.0;
        for (const auto &p : run.passes) {
            excess = std::max(excess, p.final_record().bloch_distance - Delta);
        }
        for (const auto &q : run.reservoir.qubits()) {
            excess = std::max(excess, bloch_distance(q, xi) - Delta);
        }
        return excess;
    };
    int simulated = 0;
    int violations = 0;
    int skipped = 0;
    double worst = 0.0;
    for (double eta : {std::numbers::pi / 64, std::numbers::pi / 32, std::numbers::pi / 16, std::numbers::pi / 8}) {
        for (double Delta : {0.05, 0.1, 0.2, 0.4}) {
            for (int n = 1; n <= 4; n++) {
                auto e = excess_at(eta, Delta, n);
                if (!e) {
                    skipped++;
                    continue;
                }
                simulated++;
                worst = std::max(worst, *e);
                violations += *e > 0 ? 1 : 0;
            }
        }
    }
    int boundary_points = 0;
    int boundary_violations = 0;
    for (double Delta : {0.05, 0.1, 0.2, 0.4}) {
        for (int n = 1; n <= 4; n++) {
            auto e = excess_at(std::acos(std::pow(1.0 - Delta / 2.0, 0.5 / n)), Delta, n);
            if (e) {
                boundary_points++;
                boundary_violations += *e > 1e-12 ? 1 : 0;
            }
        }
    }
    bool ok = flooring && reduces && violations == 0;
    return {ok, std::string("flooring ") + (flooring ? "ok" : "BROKEN") + ", n = 1 reduction " +
                    (reduces ? "ok" : "BROKEN") + ", grid " + std::to_string(simulated) + " simulated / " +
                    std::to_string(skipped) + " reported infeasible, " + std::to_string(violations) +
                    " exceed Delta (worst excess " + sci(worst) + "); at the coupling saturating the reuse count " +
                    std::to_string(boundary_violations) + " of " + std::to_string(boundary_points) + " exceed"};
}

Outcome first_reservoir_qubit() {
    Rng rng(110);
    double recursion = 0.0;
    double oracle = 0.0;
    for (int i = 0; i < 10; i++) {
        BlochVector s = random_bloch(rng);
        BlochVector r = random_bloch(rng);
        CouplingStrength eta(random_eta(rng));
        for (int n = 1; n <= 10; n++) {
            std::vector<BlochVector> systems(static_cast<size_t>(n), s);
            auto run = homogenize_repeated(systems, r, n, eta, Protocol::Cswap);
            BlochVector closed = first_reservoir_after(s, r, eta, n);
            recursion = std::max(recursion, (run.reservoir.qubit(1).vec() - closed.vec()).cwiseAbs().maxCoeff());
        }
        std::vector<BlochVector> two(2, s);
        OracleOptions opts;
        opts.control_mode = ControlMode::Retain;
        auto full = oracle_repeated(two, r, 3, eta, Protocol::Cswap, opts);
        oracle = std::max(oracle, entrywise(full.state.bloch({QubitRole::Reservoir, 1}), first_reservoir_after(s, r, eta, 2)));
    }
    return {recursion <= 1e-12 && oracle <= 1e-10,
            "recursion " + sci(recursion) + " (tol 1e-12), oracle marginal " + sci(oracle) + " (tol 1e-10)"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double budget_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "oracle equivalence of step maps", 5, oracle_maps},
        {2, "joint-state expressions", 5, joint_states},
        {3, "single-use reservoir bound", 1, single_use},
        {4, "fidelity-gap bound maximum", 1, gap_maximum},
        {5, "degenerate fidelity equality", 5, degenerate_fidelities},
        {6, "convergence from |0> to |+>", 5, convergence},
        {7, "trajectory planarity", 5, planarity},
        {8, "joint entropy behaviour", 30, entropy},
        {9, "reuse bounds", 30, reuse},
        {10, "first reservoir qubit closed form", 5, first_reservoir_qubit},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.pass && secs < c.budget_s;
        failures += pass ? 0 : 1;
        std::printf("criterion %2d %s: %s; %s; %.3fs (budget %.0fs)\n", c.id, pass ? "PASS" : "FAIL", c.name,
                    o.detail.c_str(), secs, c.budget_s);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
