// Copyright 2026 The naqc Authors
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

#ifndef NAQC_QCORE_H
#define NAQC_QCORE_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "naqc/errors.h"

namespace naqc {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

constexpr size_t kMaxDim = 8;
constexpr size_t kMaxQubits = 3;

/// Tolerances used when validating density matrices.
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenFloor = -1e-10;

/// Index of a Pauli matrix: 1 = sigma_x, 2 = sigma_y, 3 = sigma_z.
class PauliAxis {
   public:
    explicit constexpr PauliAxis(int index) : index_(index) {
        if (index < 1 || index > 3) {
            throw std::invalid_argument("PauliAxis index must be 1, 2 or 3");
        }
    }
    constexpr int index() const {
        return index_;
    }
    /// Zero-based position, for indexing Bloch vectors.
    constexpr size_t slot() const {
        return static_cast<size_t>(index_ - 1);
    }
    /// The axis reached by cyclically advancing this one by `shift` steps.
    constexpr PauliAxis shifted(int shift) const {
        return PauliAxis(((index_ - 1 + shift) % 3 + 3) % 3 + 1);
    }
    constexpr bool operator==(const PauliAxis &) const = default;

   private:
    int index_;
};

inline constexpr std::array<PauliAxis, 3> kAllAxes{PauliAxis(1), PauliAxis(2), PauliAxis(3)};

/// Projective measurement outcome a in {0, 1}; outcome 0 is the +1 eigenvalue.
class Outcome {
   public:
    explicit constexpr Outcome(int value) : value_(value) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("Outcome must be 0 or 1");
        }
    }
    constexpr int value() const {
        return value_;
    }
    constexpr double sign() const {
        return value_ == 0 ? 1.0 : -1.0;
    }
    constexpr bool operator==(const Outcome &) const = default;

   private:
    int value_;
};

inline constexpr std::array<Outcome, 2> kAllOutcomes{Outcome(0), Outcome(1)};

/// Square complex matrix of dimension 2, 4 or 8, stored row-major inline.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(size_t dim);

    static ComplexMatrix zeros(size_t dim) {
        return ComplexMatrix(dim);
    }
    static ComplexMatrix identity(size_t dim);
    /// Builds from nested rows; every row must have `rows.size()` entries.
    static ComplexMatrix from_rows(const std::vector<std::vector<cplx>> &rows);

    size_t dim() const {
        return dim_;
    }
    size_t nqubits() const;

    cplx &operator()(size_t row, size_t col) {
        return data_[row * dim_ + col];
    }
    const cplx &operator()(size_t row, size_t col) const {
        return data_[row * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    cplx trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx scale) {
        return a *= scale;
    }
    friend ComplexMatrix operator*(cplx scale, ComplexMatrix a) {
        return a *= scale;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    /// Largest entry-wise modulus of (this - other).
    double max_abs_diff(const ComplexMatrix &other) const;
    /// Largest entry-wise modulus of (this - this^dagger).
    double hermiticity_defect() const;

    bool operator==(const ComplexMatrix &other) const;

   private:
    size_t dim_;
    std::array<cplx, kMaxDim * kMaxDim> data_{};
};

/// Hermitian, unit-trace, positive-semidefinite matrix on 1 to 3 qubits.
class DensityMatrix {
   public:
    /// Validates `m`; throws InvalidStateError if it is not a state.
    static DensityMatrix from_matrix(const ComplexMatrix &m);

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    size_t dim() const {
        return matrix_.dim();
    }
    size_t nqubits() const {
        return matrix_.nqubits();
    }
    double purity() const;

   private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    }
    ComplexMatrix matrix_;
};

/// Single-qubit state as a Bloch vector with |r| <= 1 (+1e-9 round-off slack).
class BlochQubit {
   public:
    /// Throws InvalidStateError if |r| > 1 + 1e-9; norms in (1, 1 + 1e-9] are rescaled to 1.
    static BlochQubit from_vector(const Vec3 &r);
    static BlochQubit maximally_mixed() {
        return BlochQubit(Vec3{0, 0, 0});
    }

    const Vec3 &r() const {
        return r_;
    }
    double component(PauliAxis axis) const {
        return r_[axis.slot()];
    }
    double norm() const;

   private:
    explicit BlochQubit(const Vec3 &r) : r_(r) {
    }
    Vec3 r_;
};

struct EigenSystem {
    /// Sorted descending.
    std::vector<double> values;
    /// Column k is the eigenvector of values[k].
    ComplexMatrix vectors;
};

ComplexMatrix pauli(PauliAxis axis);
/// (I + (-1)^a sigma_axis) / 2.
ComplexMatrix projector(PauliAxis axis, Outcome a);
/// Kronecker product; the first operand is the most significant tensor factor.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced operator on the `keep` qubits (qubit 0 is the most significant factor).
/// Works on unnormalized operators; `keep` must be a nonempty proper subset.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const size_t> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const size_t> keep);

/// Closed form at dimension 2, cyclic Jacobi at 4 and 8.
EigenSystem eig_hermitian(const ComplexMatrix &m);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to zero.
ComplexMatrix sqrt_psd(const DensityMatrix &rho);

/// r_i = tr(rho sigma_i) of a one-qubit state.
Vec3 bloch_vector(const ComplexMatrix &qubit_operator);
/// (I + r . sigma) / 2, unvalidated.
ComplexMatrix qubit_matrix(const Vec3 &r);

BlochQubit bloch_of_qubit(const DensityMatrix &rho);
DensityMatrix qubit_of_bloch(const BlochQubit &q);

/// Von Neumann entropy in bits.
double entropy_bits(const DensityMatrix &rho);

}  // namespace naqc

#endif
