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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qhomog {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Tolerances shared by every state check in the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kBlochNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

/// Default register cap (qubits). The CLI honours QHOMOG_MAX_QUBITS.
inline constexpr int kDefaultMaxQubits = 13;

/// Real 3-vector parameterising a qubit state (1 + r.sigma)/2.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr BlochVector() = default;
    constexpr BlochVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    }
    explicit BlochVector(const Eigen::Vector3d &v) : x(v.x()), y(v.y()), z(v.z()) {
    }

    Eigen::Vector3d vec() const {
        return {x, y, z};
    }
    double norm() const;
    double dot(const BlochVector &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    BlochVector cross(const BlochVector &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    friend BlochVector operator+(const BlochVector &a, const BlochVector &b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend BlochVector operator-(const BlochVector &a, const BlochVector &b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend BlochVector operator*(double k, const BlochVector &a) {
        return {k * a.x, k * a.y, k * a.z};
    }
    friend bool operator==(const BlochVector &, const BlochVector &) = default;
};

/// Throws InvalidState if |b| > 1 + kBlochNormTol.
void validate_bloch(const BlochVector &b);

/// Logical role of a qubit inside a simulated register.
enum class QubitRole { System, Reservoir, Control };

struct QubitLabel {
    QubitRole role;
    int index;  // 1-based within its role, matching the protocol diagram
    friend bool operator==(const QubitLabel &, const QubitLabel &) = default;
};

std::string to_string(const QubitLabel &label);

/// Bijective map from logical labels to tensor positions 0..size-1, position 0
/// being the most significant factor of the Kronecker product.
class QubitIndexMap {
   public:
    QubitIndexMap() = default;
    explicit QubitIndexMap(std::vector<QubitLabel> labels);

    size_t size() const {
        return labels_.size();
    }
    size_t position(const QubitLabel &label) const;
    const QubitLabel &label(size_t position) const;
    const std::vector<QubitLabel> &labels() const {
        return labels_;
    }

   private:
    std::vector<QubitLabel> labels_;
};

// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Number of qubits n with dim == 2^n; throws Dimension otherwise.
int qubit_count(const ComplexMatrix &m);

struct StateCheck {
    double hermiticity = 0.0;   // max |A - A^dagger|
    double trace_error = 0.0;   // |Tr A - 1|
    double min_eigenvalue = 0.0;
    bool ok() const;
};

StateCheck check_state(const ComplexMatrix &m);

/// Throws InvalidState (or Dimension) unless m is a valid density matrix.
void validate_state(const ComplexMatrix &m);

ComplexMatrix bloch_to_density(const BlochVector &b);
BlochVector density_to_bloch(const ComplexMatrix &m);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, int max_qubits = kDefaultMaxQubits);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors, int max_qubits = kDefaultMaxQubits);

/// Reduced state on `keep` (qubit positions), kept qubits in ascending position order.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep);

/// u^dagger u == 1 within kUnitaryTol.
bool is_unitary(const ComplexMatrix &u, double tol = kUnitaryTol);

/// Returns U m U^dagger with `u` acting on `targets` (targets[0] is u's most
/// significant qubit) and the identity elsewhere.
ComplexMatrix apply_unitary(const ComplexMatrix &m, const ComplexMatrix &u, std::span<const int> targets);

/// Same embedding as apply_unitary, but only left-multiplies: returns U m.
ComplexMatrix apply_left(const ComplexMatrix &m, const ComplexMatrix &u, std::span<const int> targets);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m);

double bloch_distance(const BlochVector &a, const BlochVector &b);

/// Squared-Uhlmann fidelity of two qubit states from their Bloch vectors.
double fidelity(const BlochVector &a, const BlochVector &b);
double fidelity(const ComplexMatrix &a, const ComplexMatrix &b);

enum class LogBase { Bits, Nats };

double von_neumann_entropy(const ComplexMatrix &m, LogBase base = LogBase::Bits);

}  // namespace qhomog
