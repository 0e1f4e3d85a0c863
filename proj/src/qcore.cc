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

#include "naqc/qcore.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace naqc {

namespace {

bool valid_dim(size_t dim) {
    return dim == 2 || dim == 4 || dim == 8;
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim) {
    if (!valid_dim(dim)) {
        throw DimensionError("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>> &rows) {
    ComplexMatrix m(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != rows.size()) {
            throw DimensionError("matrix rows must be square");
        }
        for (size_t c = 0; c < rows.size(); c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

size_t ComplexMatrix::nqubits() const {
    return dim_ == 2 ? 1 : dim_ == 4 ? 2 : 3;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw DimensionError("dimension mismatch in matrix addition");
    }
    for (size_t k = 0; k < dim_ * dim_; k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw DimensionError("dimension mismatch in matrix subtraction");
    }
    for (size_t k = 0; k < dim_ * dim_; k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (size_t k = 0; k < dim_ * dim_; k++) {
        data_[k] *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("dimension mismatch in matrix product");
    }
    const size_t n = a.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            cplx ark = a(r, k);
            if (ark == cplx(0)) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (other.dim_ != dim_) {
        throw DimensionError("dimension mismatch in comparison");
    }
    double worst = 0;
    for (size_t k = 0; k < dim_ * dim_; k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::operator==(const ComplexMatrix &other) const {
    return dim_ == other.dim_ && std::equal(data_.begin(), data_.begin() + dim_ * dim_, other.data_.begin());
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix &m) {
    double herm = m.hermiticity_defect();
    if (herm > kHermitianTol) {
        throw InvalidStateError("matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    cplx tr = m.trace();
    if (std::abs(tr - cplx(1.0)) > kTraceTol) {
        throw InvalidStateError("trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    EigenSystem es = eig_hermitian(m);
    if (es.values.back() < kEigenFloor) {
        throw InvalidStateError("matrix has negative eigenvalue " + std::to_string(es.values.back()));
    }
    return DensityMatrix(m);
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

BlochQubit BlochQubit::from_vector(const Vec3 &r) {
    BlochQubit q(r);
    const double n = q.norm();
    if (!(n <= 1.0 + 1e-9)) {
        throw InvalidStateError("Bloch vector norm " + std::to_string(n) + " exceeds 1");
    }
    // Round-off slack is projected back onto the sphere.
    if (n > 1.0) {
        for (double &x : q.r_) {
            x /= n;
        }
    }
    return q;
}

double BlochQubit::norm() const {
    return std::sqrt(r_[0] * r_[0] + r_[1] * r_[1] + r_[2] * r_[2]);
}

ComplexMatrix pauli(PauliAxis axis) {
    ComplexMatrix m(2);
    switch (axis.index()) {
        case 1:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 2:
            m(0, 1) = cplx(0, -1);
            m(1, 0) = cplx(0, 1);
            break;
        default:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
    }
    return m;
}

ComplexMatrix projector(PauliAxis axis, Outcome a) {
    return (ComplexMatrix::identity(2) + pauli(axis) * a.sign()) * 0.5;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const size_t da = a.dim();
    const size_t db = b.dim();
    if (da * db > kMaxDim) {
        throw DimensionError("Kronecker product dimension " + std::to_string(da * db) + " exceeds 8");
    }
    ComplexMatrix out(da * db);
    for (size_t ra = 0; ra < da; ra++) {
        for (size_t ca = 0; ca < da; ca++) {
            cplx x = a(ra, ca);
            for (size_t rb = 0; rb < db; rb++) {
                for (size_t cb = 0; cb < db; cb++) {
                    out(ra * db + rb, ca * db + cb) = x * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const size_t> keep) {
    const size_t n = m.nqubits();
    size_t keep_mask = 0;
    for (size_t q : keep) {
        if (q >= n) {
            throw std::invalid_argument("partial_trace: qubit index out of range");
        }
        keep_mask |= size_t{1} << q;
    }
    const size_t kept = static_cast<size_t>(std::popcount(keep_mask));
    if (kept == 0 || kept == n) {
        throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
    }

    // Qubit q occupies bit (n - 1 - q) of a basis index.
    auto reduced_index = [&](size_t full) {
        size_t out = 0;
        for (size_t q = 0; q < n; q++) {
            if (keep_mask >> q & 1) {
                out = out << 1 | (full >> (n - 1 - q) & 1);
            }
        }
        return out;
    };
    size_t traced_bits = 0;
    for (size_t q = 0; q < n; q++) {
        if (!(keep_mask >> q & 1)) {
            traced_bits |= size_t{1} << (n - 1 - q);
        }
    }

    ComplexMatrix out(size_t{1} << kept);
    const size_t dim = m.dim();
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            if ((r & traced_bits) != (c & traced_bits)) {
                continue;
            }
            out(reduced_index(r), reduced_index(c)) += m(r, c);
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const size_t> keep) {
    return DensityMatrix::from_matrix(partial_trace(rho.matrix(), keep));
}

ComplexMatrix sqrt_psd(const DensityMatrix &rho) {
    EigenSystem es = eig_hermitian(rho.matrix());
    const size_t n = rho.dim();
    ComplexMatrix out(n);
    for (size_t k = 0; k < n; k++) {
        double lambda = es.values[k];
        if (lambda < kEigenFloor) {
            throw InvalidStateError("sqrt_psd: negative eigenvalue " + std::to_string(lambda));
        }
        double root = std::sqrt(std::max(lambda, 0.0));
        for (size_t r = 0; r < n; r++) {
            cplx vr = es.vectors(r, k) * root;
            for (size_t c = 0; c < n; c++) {
                out(r, c) += vr * std::conj(es.vectors(c, k));
            }
        }
    }
    return out;
}

Vec3 bloch_vector(const ComplexMatrix &qubit_operator) {
    if (qubit_operator.dim() != 2) {
        throw DimensionError("Bloch vector requires a one-qubit operator");
    }
    const ComplexMatrix &m = qubit_operator;
    // tr(m sigma_x) = m01 + m10, tr(m sigma_y) = i(m01 - m10), tr(m sigma_z) = m00 - m11.
    return Vec3{(m(0, 1) + m(1, 0)).real(), (cplx(0, 1) * (m(0, 1) - m(1, 0))).real(),
                (m(0, 0) - m(1, 1)).real()};
}

ComplexMatrix qubit_matrix(const Vec3 &r) {
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1 + r[2]);
    m(1, 1) = 0.5 * (1 - r[2]);
    m(0, 1) = 0.5 * cplx(r[0], -r[1]);
    m(1, 0) = 0.5 * cplx(r[0], r[1]);
    return m;
}

BlochQubit bloch_of_qubit(const DensityMatrix &rho) {
    return BlochQubit::from_vector(bloch_vector(rho.matrix()));
}

DensityMatrix qubit_of_bloch(const BlochQubit &q) {
    return DensityMatrix::from_matrix(qubit_matrix(q.r()));
}

double entropy_bits(const DensityMatrix &rho) {
    double s = 0;
    for (double lambda : eig_hermitian(rho.matrix()).values) {
        if (lambda > 0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

}  // namespace naqc
