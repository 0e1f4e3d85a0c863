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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "naqc/qcore.h"

namespace naqc {

namespace {

constexpr double kJacobiOffDiagTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

EigenSystem eig_2x2(const ComplexMatrix &m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const cplx b = m(0, 1);
    const double mean = 0.5 * (a + d);
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(b));

    EigenSystem es{{mean + half_gap, mean - half_gap}, ComplexMatrix::identity(2)};
    if (std::abs(b) == 0) {
        if (d > a) {
            es.vectors = ComplexMatrix(2);
            es.vectors(1, 0) = 1;
            es.vectors(0, 1) = 1;
        }
        return es;
    }

    // Pick the row of (A - lambda_+ I) whose null vector avoids cancellation.
    cplx v0, v1;
    if (a >= d) {
        v0 = es.values[0] - d;
        v1 = std::conj(b);
    } else {
        v0 = b;
        v1 = es.values[0] - a;
    }
    double norm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= norm;
    v1 /= norm;
    es.vectors(0, 0) = v0;
    es.vectors(1, 0) = v1;
    es.vectors(0, 1) = -std::conj(v1);
    es.vectors(1, 1) = std::conj(v0);
    return es;
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                sum += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

/// Cyclic Jacobi for complex Hermitian matrices. Each rotation is a phase
/// that makes a(p,q) real followed by the classical real Jacobi rotation.
EigenSystem eig_jacobi(const ComplexMatrix &m) {
    const size_t n = m.dim();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; sweep++) {
        if (off_diagonal_norm(a) < kJacobiOffDiagTol) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                const cplx apq = a(p, q);
                const double g = std::abs(apq);
                if (g < 1e-300) {
                    continue;
                }
                const cplx phase = apq / g;  // e^{i phi}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2 * g);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;

                // U restricted to (p, q) = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
                const cplx upp = c;
                const cplx upq = s;
                const cplx uqp = -s * std::conj(phase);
                const cplx uqq = c * std::conj(phase);

                for (size_t k = 0; k < n; k++) {
                    cplx akp = a(k, p);
                    cplx akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx apk = a(p, k);
                    cplx aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx vkp = v(k, p);
                    cplx vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return a(x, x).real() > a(y, y).real(); });

    EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        es.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            es.vectors(r, k) = v(r, order[k]);
        }
    }
    return es;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix &m) {
    if (m.hermiticity_defect() > kHermitianTol) {
        throw InvalidStateError("eig_hermitian: matrix is not Hermitian");
    }
    return m.dim() == 2 ? eig_2x2(m) : eig_jacobi(m);
}

}  // namespace naqc
