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

// Closed-form resource bounds for single and repeated homogenization, plus the
// fidelity comparison between the two protocols.
//
// All distances are Bloch-vector Euclidean distances (so d = 2 for orthogonal
// pure states). Real-valued bounds are integerised conservatively: ceil for
// reservoir sizes, floor for reuse counts. Parameter regions with no solution
// come back as feasible == false with a reason instead of throwing.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qhomog/quantum_core.hpp"

namespace qhomog {

enum class BoundFormula {
    SingleUse,       // N >= ln(delta/d) / ln(1 - delta/d)
    ReuseCount,      // n <= ln(1 - delta/d) / (2 ln cos eta)
    ReuseReservoir,  // N >= ln(1 - x) / ln(x),  x = (d - Delta) / (d cos^{2(n-1)} eta)
};

std::string_view to_string(BoundFormula f);

struct BoundReport {
    BoundFormula formula = BoundFormula::SingleUse;

    double delta = 0.0;  // delta (single use / reuse count) or Delta (reuse reservoir)
    double d = 0.0;
    std::optional<double> eta;
    std::optional<int> n;

    double raw_bound = 0.0;  // real-valued bound before integerising
    int reservoir_min = 0;   // N_min
    int reuse_max = 0;       // n_max
    /// Single use: delta/d. Reuse reservoir: the s^2 the worst-case argument
    /// assumes. Reuse count: largest s^2 that still allows n_max passes.
    double s_squared_limit = 0.0;
    bool feasible = true;
    bool unbounded = false;  // constraint vacuous (eta = 0 or delta >= d)
    std::string reason;
};

/// Throws Domain for delta <= 0, d <= 0 or d > 2.
BoundReport min_reservoir_single(double delta, double d);

/// Throws Domain unless delta > 0, 0 < d <= 2, eta in [0, pi/2].
BoundReport max_reuse_count(double delta, double d, double eta);

/// Throws Domain unless Delta > 0, 0 < d <= 2, eta in [0, pi/2), n >= 1.
BoundReport min_reservoir_reuse(double Delta, double d, double eta, int n);

/// Both reuse constraints for one parameter point. `admissible` is true when
/// the reservoir bound is feasible and n does not exceed n_max.
struct ReuseAssessment {
    BoundReport reservoir;
    BoundReport count;
    bool admissible = false;
};

ReuseAssessment assess_reuse(double Delta, double d, double eta, int n);

/// (F_inc, F_coh): fidelity with the reservoir state after one CSWAP / PSWAP
/// interaction, using the library's step maps and the general qubit fidelity.
struct FidelityPair {
    double incoherent = 0.0;
    double coherent = 0.0;
};

FidelityPair fidelity_pair(const BlochVector &system, const BlochVector &reservoir, double eta);

/// The same pair evaluated from the published closed forms verbatim (dot term
/// c^2 b.a + s^2 and cross coefficient cs/4). Reference only.
FidelityPair fidelity_pair_printed(const BlochVector &system, const BlochVector &reservoir, double eta);

/// Published upper bound on (F_inc - F_coh)/F_inc, a function of |alpha| only.
double fidelity_gap_bound(double alpha);

/// Published intermediate bound for perpendicular system (beta x) and
/// reservoir (alpha z) vectors, transcribed with its printed signs.
double fidelity_gap_intermediate(double alpha, double beta, double eta);

/// Same expression with |c^2 beta x + s^2 alpha z|^2 = c^4 beta^2 + s^4 alpha^2
/// subtracted in full. Reduces to fidelity_gap_bound at beta = 1, eta = pi/4.
double fidelity_gap_consistent(double alpha, double beta, double eta);

/// |F_inc - F_coh| / F_inc for system beta*x, reservoir alpha*z at coupling eta
/// with cross-term coefficient `kappa`.
double fidelity_gap_measured(double alpha, double beta, double eta, double kappa);

struct ScanMaximum {
    double argmax = 0.0;
    double value = 0.0;
};

/// Grid scan of fidelity_gap_bound on [lo, hi] with spacing `step`.
ScanMaximum scan_fidelity_gap_bound(double lo, double hi, double step);

}  // namespace qhomog
