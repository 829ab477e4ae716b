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

#include "qhomog/quantum_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "qhomog/error.hpp"

namespace qhomog {

namespace {

std::string describe(const char *what, double value) {
    std::ostringstream ss;
    ss.precision(17);
    ss << what << " " << value;
    return ss.str();
}

// Index bit of tensor position `pos` in an n-qubit register.
size_t position_bit(int n, int pos) {
    return size_t{1} << (n - 1 - pos);
}

void check_targets(int n, std::span<const int> targets) {
    for (size_t i = 0; i < targets.size(); i++) {
        if (targets[i] < 0 || targets[i] >= n) {
            throw Error(ErrorKind::Index, "qubit position " + std::to_string(targets[i]) + " outside register of " +
                                              std::to_string(n) + " qubits");
        }
        for (size_t j = 0; j < i; j++) {
            if (targets[i] == targets[j]) {
                throw Error(ErrorKind::Index, "duplicate qubit position " + std::to_string(targets[i]));
            }
        }
    }
}

}  // namespace

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

void validate_bloch(const BlochVector &b) {
    if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.z)) {
        throw Error(ErrorKind::InvalidState, "Bloch vector has non-finite components");
    }
    double n = b.norm();
    if (n > 1.0 + kBlochNormTol) {
        throw Error(ErrorKind::InvalidState, describe("Bloch vector norm exceeds 1:", n));
    }
}

std::string to_string(const QubitLabel &label) {
    switch (label.role) {
        case QubitRole::System:
            return "s" + std::to_string(label.index);
        case QubitRole::Reservoir:
            return "r" + std::to_string(label.index);
        case QubitRole::Control:
            return "c" + std::to_string(label.index);
    }
    return "?";
}

QubitIndexMap::QubitIndexMap(std::vector<QubitLabel> labels) : labels_(std::move(labels)) {
    for (size_t i = 0; i < labels_.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (labels_[i] == labels_[j]) {
                throw Error(ErrorKind::Index, "duplicate qubit label " + to_string(labels_[i]));
            }
        }
    }
}

size_t QubitIndexMap::position(const QubitLabel &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(ErrorKind::Index, "no qubit labelled " + to_string(label));
    }
    return static_cast<size_t>(it - labels_.begin());
}

const QubitLabel &QubitIndexMap::label(size_t position) const {
    if (position >= labels_.size()) {
        throw Error(ErrorKind::Index, "qubit position " + std::to_string(position) + " out of range");
    }
    return labels_[position];
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

int qubit_count(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::Dimension, "matrix is not square");
    }
    auto dim = static_cast<size_t>(m.rows());
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::Dimension, "dimension " + std::to_string(dim) + " is not a power of two");
    }
    return std::countr_zero(dim);
}

bool StateCheck::ok() const {
    return hermiticity <= kHermitianTol && trace_error <= kTraceTol && min_eigenvalue >= -kPsdTol;
}

StateCheck check_state(const ComplexMatrix &m) {
    qubit_count(m);
    StateCheck out;
    out.hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff();
    out.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
    out.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
    return out;
}

void validate_state(const ComplexMatrix &m) {
    auto check = check_state(m);
    if (check.hermiticity > kHermitianTol) {
        throw Error(ErrorKind::InvalidState, describe("matrix is not Hermitian, deviation", check.hermiticity));
    }
    if (check.trace_error > kTraceTol) {
        throw Error(ErrorKind::InvalidState, describe("trace differs from 1 by", check.trace_error));
    }
    if (check.min_eigenvalue < -kPsdTol) {
        throw Error(ErrorKind::InvalidState, describe("negative eigenvalue", check.min_eigenvalue));
    }
}

ComplexMatrix bloch_to_density(const BlochVector &b) {
    validate_bloch(b);
    ComplexMatrix m(2, 2);
    m << Complex(0.5 * (1.0 + b.z), 0.0), Complex(0.5 * b.x, -0.5 * b.y), Complex(0.5 * b.x, 0.5 * b.y),
        Complex(0.5 * (1.0 - b.z), 0.0);
    return m;
}

BlochVector density_to_bloch(const ComplexMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw Error(ErrorKind::Dimension, "expected a 2x2 single-qubit state");
    }
    validate_state(m);
    // Tr(m sigma_i) written out on the four entries.
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, int max_qubits) {
    auto rows = static_cast<size_t>(a.rows()) * static_cast<size_t>(b.rows());
    auto cols = static_cast<size_t>(a.cols()) * static_cast<size_t>(b.cols());
    auto cap = size_t{1} << max_qubits;
    if (rows > cap || cols > cap) {
        throw Error(ErrorKind::Capacity, "tensor product of dimension " + std::to_string(rows) +
                                             " exceeds register cap of " + std::to_string(max_qubits) + " qubits");
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors, int max_qubits) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (const auto &f : factors) {
        out = kron(out, f, max_qubits);
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep) {
    int n = qubit_count(m);
    check_targets(n, keep);
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    std::vector<int> traced;
    for (int q = 0; q < n; q++) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    auto offsets = [n](const std::vector<int> &qubits) {
        size_t k = qubits.size();
        std::vector<size_t> out(size_t{1} << k, 0);
        for (size_t v = 0; v < out.size(); v++) {
            for (size_t j = 0; j < k; j++) {
                if ((v >> (k - 1 - j)) & 1) {
                    out[v] |= position_bit(n, qubits[j]);
                }
            }
        }
        return out;
    };
    auto keep_off = offsets(kept);
    auto trace_off = offsets(traced);

    auto dim = static_cast<Eigen::Index>(keep_off.size());
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        for (Eigen::Index r = 0; r < dim; r++) {
            Complex acc = 0.0;
            for (size_t t : trace_off) {
                acc += m(keep_off[r] | t, keep_off[c] | t);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    ComplexMatrix err = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return err.cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix apply_left(const ComplexMatrix &m, const ComplexMatrix &u, std::span<const int> targets) {
    int n = qubit_count(m);
    check_targets(n, targets);
    auto k = targets.size();
    auto gate_dim = size_t{1} << k;
    if (static_cast<size_t>(u.rows()) != gate_dim || static_cast<size_t>(u.cols()) != gate_dim) {
        throw Error(ErrorKind::Dimension, "gate of dimension " + std::to_string(u.rows()) + " cannot act on " +
                                              std::to_string(k) + " qubits");
    }

    size_t target_mask = 0;
    std::vector<size_t> local(gate_dim, 0);
    for (size_t j = 0; j < k; j++) {
        target_mask |= position_bit(n, targets[j]);
    }
    for (size_t a = 0; a < gate_dim; a++) {
        for (size_t j = 0; j < k; j++) {
            if ((a >> (k - 1 - j)) & 1) {
                local[a] |= position_bit(n, targets[j]);
            }
        }
    }

    ComplexMatrix out(m.rows(), m.cols());
    std::vector<Complex> in(gate_dim);
    auto dim = static_cast<size_t>(m.rows());
    for (size_t base = 0; base < dim; base++) {
        if (base & target_mask) {
            continue;
        }
        for (Eigen::Index col = 0; col < m.cols(); col++) {
            for (size_t b = 0; b < gate_dim; b++) {
                in[b] = m(base | local[b], col);
            }
            for (size_t a = 0; a < gate_dim; a++) {
                Complex acc = 0.0;
                for (size_t b = 0; b < gate_dim; b++) {
                    acc += u(a, b) * in[b];
                }
                out(base | local[a], col) = acc;
            }
        }
    }
    return out;
}

ComplexMatrix apply_unitary(const ComplexMatrix &m, const ComplexMatrix &u, std::span<const int> targets) {
    if (!is_unitary(u)) {
        throw Error(ErrorKind::Gate, "gate is not unitary within tolerance");
    }
    ComplexMatrix um = apply_left(m, u, targets);
    // U m U^dagger = (U (U m)^dagger)^dagger
    ComplexMatrix umd = um.adjoint();
    return apply_left(umd, u, targets).adjoint();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double bloch_distance(const BlochVector &a, const BlochVector &b) {
    return (a - b).norm();
}

namespace {

// 1 - |r|^2, with rounding-level defects of unit vectors snapped to zero so the
// square root in the fidelity does not blow 1e-16 up to 1e-8.
double mixedness(const BlochVector &r) {
    double m = 1.0 - r.dot(r);
    return m < 16 * std::numeric_limits<double>::epsilon() ? 0.0 : m;
}

}  // namespace

double fidelity(const BlochVector &a, const BlochVector &b) {
    validate_bloch(a);
    validate_bloch(b);
    double ma = mixedness(a);
    double mb = mixedness(b);
    double f = 0.5 * (1.0 + a.dot(b) + std::sqrt(ma * mb));
    return std::clamp(f, 0.0, 1.0);
}

double fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    return fidelity(density_to_bloch(a), density_to_bloch(b));
}

double von_neumann_entropy(const ComplexMatrix &m, LogBase base) {
    qubit_count(m);
    double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
        throw Error(ErrorKind::InvalidState, describe("matrix is not Hermitian, deviation", herm));
    }
    double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (tr_err > kTraceTol) {
        throw Error(ErrorKind::InvalidState, describe("trace differs from 1 by", tr_err));
    }
    Eigen::VectorXd ev = hermitian_eigenvalues(m);
    if (ev.minCoeff() < -kPsdTol) {
        throw Error(ErrorKind::InvalidState, describe("negative eigenvalue", ev.minCoeff()));
    }
    double s = 0.0;
    for (double lambda : ev) {
        lambda = std::min(lambda, 1.0);
        // Eigensolver noise on zero eigenvalues is ~1e-15 and would otherwise show up as ~1e-14 bits.
        if (lambda > 1e-12) {
            s -= lambda * std::log(lambda);
        }
    }
    return base == LogBase::Bits ? s / std::log(2.0) : s;
}

}  // namespace qhomog
