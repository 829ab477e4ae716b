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

// Deliberately naive reference implementations used as test oracles. They
// share no code with the library beyond the matrix type.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace naive {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M kron(const M &a, const M &b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            for (Eigen::Index k = 0; k < b.rows(); k++) {
                for (Eigen::Index l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline int bit(long index, int position, int qubits) {
    return static_cast<int>((index >> (qubits - 1 - position)) & 1);
}

// Sum over basis states agreeing on the traced qubits; position 0 is the leftmost factor.
inline M partial_trace(const M &m, const std::vector<int> &keep, int qubits) {
    long dim = 1L << keep.size();
    M out = M::Zero(dim, dim);
    long full = 1L << qubits;
    std::vector<bool> kept(static_cast<size_t>(qubits), false);
    for (int k : keep) {
        kept[static_cast<size_t>(k)] = true;
    }
    auto reduce = [&](long idx) {
        long r = 0;
        for (int k : keep) {
            r = (r << 1) | bit(idx, k, qubits);
        }
        return r;
    };
    for (long i = 0; i < full; i++) {
        for (long j = 0; j < full; j++) {
            bool same = true;
            for (int q = 0; q < qubits && same; q++) {
                if (!kept[static_cast<size_t>(q)] && bit(i, q, qubits) != bit(j, q, qubits)) {
                    same = false;
                }
            }
            if (same) {
                out(reduce(i), reduce(j)) += m(i, j);
            }
        }
    }
    return out;
}

inline std::array<M, 3> paulis() {
    M x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, C(0, -1), C(0, 1), 0;
    z << 1, 0, 0, -1;
    return {x, y, z};
}

inline M density(double x, double y, double z) {
    auto p = paulis();
    M id = M::Identity(2, 2);
    return 0.5 * (id + x * p[0] + y * p[1] + z * p[2]);
}

inline std::array<double, 3> bloch(const M &rho) {
    auto p = paulis();
    return {(rho * p[0]).trace().real(), (rho * p[1]).trace().real(), (rho * p[2]).trace().real()};
}

inline M sqrtm_psd(const M &m) {
    Eigen::SelfAdjointEigenSolver<M> es(m);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.cast<C>().asDiagonal() * es.eigenvectors().adjoint();
}

// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
inline double uhlmann(const M &a, const M &b) {
    M r = sqrtm_psd(a);
    M inner = r * b * r;
    inner = 0.5 * (inner + inner.adjoint());
    double t = sqrtm_psd(inner).trace().real();
    return t * t;
}

inline double entropy_bits(const M &m) {
    Eigen::SelfAdjointEigenSolver<M> es(0.5 * (m + m.adjoint()));
    double s = 0.0;
    for (double l : es.eigenvalues()) {
        if (l > 1e-12) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

// 4x4 swap written out entry by entry.
inline M swap4() {
    M s = M::Zero(4, 4);
    s(0, 0) = s(3, 3) = 1;
    s(1, 2) = s(2, 1) = 1;
    return s;
}

}  // namespace naive
