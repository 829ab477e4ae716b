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

#pragma once

#include <numbers>

#include "qhomog/quantum_core.hpp"

namespace qhomog {

/// Swap-weight angle eta in [0, pi/2] (radians).
class CouplingStrength {
   public:
    /// Throws Domain outside [0, pi/2] (a 1e-15 overshoot is snapped to the edge).
    explicit CouplingStrength(double eta);

    double eta() const {
        return eta_;
    }
    double c() const {
        return c_;
    }
    double s() const {
        return s_;
    }
    double c2() const {
        return c_ * c_;
    }
    double s2() const {
        return s_ * s_;
    }

   private:
    double eta_;
    double c_;
    double s_;
};

inline constexpr double kHalfPi = std::numbers::pi / 2;

ComplexMatrix swap_gate();

/// cos(eta) 1 + i sin(eta) SWAP.
ComplexMatrix pswap(const CouplingStrength &eta);

/// Fredkin gate |0><0| (x) 1 + |1><1| (x) SWAP; control is the most significant qubit.
ComplexMatrix cswap();

/// |c><c| with |c> = cos(eta)|0> + sin(eta)|1>.
ComplexMatrix control_state(const CouplingStrength &eta);
BlochVector control_bloch(const CouplingStrength &eta);

}  // namespace qhomog
