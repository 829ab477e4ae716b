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

#include "qhomog/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhomog/error.hpp"

namespace qhomog {

CouplingStrength::CouplingStrength(double eta) {
    constexpr double snap = 1e-15;
    if (!std::isfinite(eta) || eta < -snap || eta > kHalfPi + snap) {
        throw Error(ErrorKind::Domain, "coupling strength eta=" + std::to_string(eta) + " outside [0, pi/2]");
    }
    eta_ = std::clamp(eta, 0.0, kHalfPi);
    c_ = std::cos(eta_);
    s_ = std::sin(eta_);
    if (eta_ == kHalfPi) {
        c_ = 0.0;
        s_ = 1.0;
    }
}

ComplexMatrix swap_gate() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

ComplexMatrix pswap(const CouplingStrength &eta) {
    return eta.c() * ComplexMatrix::Identity(4, 4) + Complex(0.0, eta.s()) * swap_gate();
}

ComplexMatrix cswap() {
    ComplexMatrix m = ComplexMatrix::Identity(8, 8);
    // |1 0 1> <-> |1 1 0>
    m(5, 5) = 0;
    m(6, 6) = 0;
    m(5, 6) = 1;
    m(6, 5) = 1;
    return m;
}

ComplexMatrix control_state(const CouplingStrength &eta) {
    ComplexMatrix m(2, 2);
    double c = eta.c();
    double s = eta.s();
    m << c * c, c * s, c * s, s * s;
    return m;
}

BlochVector control_bloch(const CouplingStrength &eta) {
    double c = eta.c();
    double s = eta.s();
    return {2.0 * c * s, 0.0, c * c - s * s};
}

}  // namespace qhomog
