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

#include "qhomog/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhomog/error.hpp"
#include "qhomog/gates.hpp"
#include "qhomog/reduced_dynamics.hpp"

namespace qhomog {

namespace {

// Guards the integer conversions against rounding noise on exact integers.
constexpr double kIntegerSlack = 1e-12;

void check_distance_args(const char *name, double delta, double d) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorKind::Domain, std::string(name) + " must be positive");
    }
    if (!(d > 0.0) || d > 2.0 + kBlochNormTol) {
        throw Error(ErrorKind::Domain, "initial Bloch distance d must lie in (0, 2]");
    }
}

int ceil_count(double raw) {
    return static_cast<int>(std::ceil(raw - kIntegerSlack));
}

int floor_count(double raw) {
    return static_cast<int>(std::floor(raw + kIntegerSlack));
}

}  // namespace

std::string_view to_string(BoundFormula f) {
    switch (f) {
        case BoundFormula::SingleUse:
            return "single-use";
        case BoundFormula::ReuseCount:
            return "reuse-count";
        case BoundFormula::ReuseReservoir:
            return "reuse-reservoir";
    }
    return "unknown";
}

BoundReport min_reservoir_single(double delta, double d) {
    check_distance_args("delta", delta, d);
    BoundReport r;
    r.formula = BoundFormula::SingleUse;
    r.delta = delta;
    r.d = d;
    double ratio = delta / d;
    r.s_squared_limit = std::min(ratio, 1.0);
    if (ratio >= 1.0) {
        r.reason = "already within delta";
        return r;
    }
    r.raw_bound = std::log(ratio) / std::log1p(-ratio);
    r.reservoir_min = std::max(0, ceil_count(r.raw_bound));
    return r;
}

BoundReport max_reuse_count(double delta, double d, double eta) {
    check_distance_args("delta", delta, d);
    CouplingStrength coupling(eta);
    BoundReport r;
    r.formula = BoundFormula::ReuseCount;
    r.delta = delta;
    r.d = d;
    r.eta = coupling.eta();
    double ratio = delta / d;
    if (ratio >= 1.0) {
        r.unbounded = true;
        r.s_squared_limit = 1.0;
        r.reason = "delta >= d: reservoir constraint is vacuous";
        return r;
    }
    if (coupling.c2() == 1.0) {
        r.unbounded = true;
        r.raw_bound = HUGE_VAL;
        r.s_squared_limit = 0.0;
        r.reason = "eta = 0: reservoir never changes";
        return r;
    }
    if (coupling.c2() == 0.0) {
        r.raw_bound = 0.0;
    } else {
        r.raw_bound = std::log1p(-ratio) / std::log(coupling.c2());
    }
    r.reuse_max = std::max(0, floor_count(r.raw_bound));
    r.feasible = r.reuse_max >= 1;
    if (!r.feasible) {
        r.reason = "coupling too strong for a single pass within delta";
    }
    int passes = std::max(r.reuse_max, 1);
    r.s_squared_limit = -std::expm1(std::log1p(-ratio) / passes);
    return r;
}

BoundReport min_reservoir_reuse(double Delta, double d, double eta, int n) {
    check_distance_args("Delta", Delta, d);
    if (n < 1) {
        throw Error(ErrorKind::Domain, "number of systems n must be >= 1");
    }
    CouplingStrength coupling(eta);
    if (coupling.c2() == 0.0) {
        throw Error(ErrorKind::Domain, "eta = pi/2 leaves no residual reservoir state for reuse");
    }
    BoundReport r;
    r.formula = BoundFormula::ReuseReservoir;
    r.delta = Delta;
    r.d = d;
    r.eta = coupling.eta();
    r.n = n;
    if (Delta >= d) {
        r.s_squared_limit = 1.0;
        r.reason = "already within Delta";
        return r;
    }
    double decay = std::pow(coupling.c2(), n - 1);  // c^{2(n-1)}
    double x = (d - Delta) / (d * decay);
    double epsilon = Delta - d * (1.0 - decay);
    if (!(epsilon > 0.0) || x >= 1.0) {
        r.feasible = false;
        r.reason = "worn first reservoir qubit already exceeds Delta (epsilon = " + std::to_string(epsilon) +
                   "); weaken the coupling or reduce n";
        return r;
    }
    r.s_squared_limit = 1.0 - x;
    r.raw_bound = std::log1p(-x) / std::log(x);
    r.reservoir_min = std::max(0, ceil_count(r.raw_bound));
    return r;
}

ReuseAssessment assess_reuse(double Delta, double d, double eta, int n) {
    ReuseAssessment a;
    a.reservoir = min_reservoir_reuse(Delta, d, eta, n);
    a.count = max_reuse_count(Delta, d, eta);
    bool count_ok = a.count.unbounded || (a.count.feasible && n <= a.count.reuse_max);
    a.admissible = a.reservoir.feasible && count_ok;
    return a;
}

FidelityPair fidelity_pair(const BlochVector &system, const BlochVector &reservoir, double eta) {
    CouplingStrength coupling(eta);
    auto inc = cswap_step(system, reservoir, coupling);
    auto coh = pswap_step(system, reservoir, coupling);
    return {fidelity(inc.system_out, reservoir), fidelity(coh.system_out, reservoir)};
}

FidelityPair fidelity_pair_printed(const BlochVector &system, const BlochVector &reservoir, double eta) {
    validate_bloch(system);
    validate_bloch(reservoir);
    CouplingStrength k(eta);
    double head = 0.5 * (1.0 + k.c2() * system.dot(reservoir) + k.s2());
    BlochVector inc = k.c2() * system + k.s2() * reservoir;
    BlochVector coh = inc + (kPrintedCrossTermCoefficient * k.c() * k.s()) * system.cross(reservoir);
    double mix = 1.0 - reservoir.dot(reservoir);
    auto tail = [mix](const BlochVector &v) { return 0.5 * std::sqrt(std::max(0.0, (1.0 - v.dot(v)) * mix)); };
    return {head + tail(inc), head + tail(coh)};
}

double fidelity_gap_bound(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorKind::Domain, "alpha must lie in [0, 1]");
    }
    double a2 = alpha * alpha;
    double m = std::sqrt(1.0 - a2);
    double outer = std::sqrt(3.0 - a2);
    double inner = std::sqrt(3.0 - a2 - alpha / 2.0);
    return m * (outer - inner) / (3.0 + m * outer);
}

namespace {

double gap_from_norm(double alpha, double beta, double eta, double reservoir_sign) {
    if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
        throw Error(ErrorKind::Domain, "alpha and beta must lie in [0, 1]");
    }
    CouplingStrength k(eta);
    double c4 = k.c2() * k.c2();
    double s4 = k.s2() * k.s2();
    double m = std::sqrt(1.0 - alpha * alpha);
    double base = 1.0 - c4 * beta * beta + reservoir_sign * s4 * alpha * alpha;
    double outer = std::sqrt(std::max(0.0, base));
    double inner = std::sqrt(std::max(0.0, base - k.c2() * k.s2() * alpha * beta / 2.0));
    return m * (outer - inner) / (1.0 + k.s2() + m * outer);
}

}  // namespace

double fidelity_gap_intermediate(double alpha, double beta, double eta) {
    return gap_from_norm(alpha, beta, eta, +1.0);
}

double fidelity_gap_consistent(double alpha, double beta, double eta) {
    return gap_from_norm(alpha, beta, eta, -1.0);
}

double fidelity_gap_measured(double alpha, double beta, double eta, double kappa) {
    CouplingStrength k(eta);
    BlochVector system{beta, 0.0, 0.0};
    BlochVector reservoir{0.0, 0.0, alpha};
    validate_bloch(system);
    validate_bloch(reservoir);
    BlochVector inc = k.c2() * system + k.s2() * reservoir;
    BlochVector coh = inc + (kappa * k.c() * k.s()) * system.cross(reservoir);
    if (coh.norm() > 1.0 + kBlochNormTol) {
        throw Error(ErrorKind::Domain, "cross-term coefficient produces an unphysical state");
    }
    double f_inc = fidelity(inc, reservoir);
    double f_coh = fidelity(coh, reservoir);
    return std::abs(f_inc - f_coh) / f_inc;
}

ScanMaximum scan_fidelity_gap_bound(double lo, double hi, double step) {
    if (!(step > 0.0) || !(lo <= hi) || lo < 0.0 || hi > 1.0) {
        throw Error(ErrorKind::Domain, "scan range must satisfy 0 <= lo <= hi <= 1 with step > 0");
    }
    ScanMaximum best{lo, fidelity_gap_bound(lo)};
    auto count = static_cast<long>(std::floor((hi - lo) / step + kIntegerSlack));
    for (long i = 1; i <= count; i++) {
        double a = std::min(hi, lo + static_cast<double>(i) * step);
        double v = fidelity_gap_bound(a);
        if (v > best.value) {
            best = {a, v};
        }
    }
    return best;
}

}  // namespace qhomog
