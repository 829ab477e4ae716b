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

#include "qhomog/sampling.hpp"

#include <cmath>

#include "qhomog/gates.hpp"

namespace qhomog {

namespace {

ComplexMatrix ginibre(Eigen::Index dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        for (Eigen::Index r = 0; r < dim; r++) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

BlochVector random_pure_bloch(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        double x = normal(rng);
        double y = normal(rng);
        double z = normal(rng);
        double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-9) {
            return {x / n, y / n, z / n};
        }
    }
}

BlochVector random_bloch(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BlochVector dir = random_pure_bloch(rng);
    return std::cbrt(unit(rng)) * dir;
}

double random_eta(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, kHalfPi);
    return unit(rng);
}

ComplexMatrix random_density(int qubits, Rng &rng) {
    auto dim = Eigen::Index{1} << qubits;
    ComplexMatrix g = ginibre(dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_unitary(int qubits, Rng &rng) {
    auto dim = Eigen::Index{1} << qubits;
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, rng));
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

}  // namespace qhomog
