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

#include <random>

#include "qhomog/quantum_core.hpp"

namespace qhomog {

using Rng = std::mt19937_64;

/// Uniform in the unit ball.
BlochVector random_bloch(Rng &rng);
/// Uniform on the unit sphere (pure states).
BlochVector random_pure_bloch(Rng &rng);
/// Uniform in [0, pi/2].
double random_eta(Rng &rng);
/// Ginibre-distributed mixed state on `qubits` qubits.
ComplexMatrix random_density(int qubits, Rng &rng);
/// Haar-ish unitary via QR of a Ginibre matrix.
ComplexMatrix random_unitary(int qubits, Rng &rng);

}  // namespace qhomog
