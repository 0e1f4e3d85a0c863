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

#include "naqc/states.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "naqc/random.h"

namespace naqc {

namespace {

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

void require_nqubits(size_t nqubits) {
    if (nqubits < 1 || nqubits > kMaxQubits) {
        throw std::invalid_argument("nqubits must be 1, 2 or 3");
    }
}

double norm3(const Vec3 &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

DensityMatrix from_bloch(const TwoQubitBloch &p) {
    if (norm3(p.r) > 1 + 1e-9 || norm3(p.s) > 1 + 1e-9) {
        throw std::invalid_argument("local Bloch vectors must have norm <= 1");
    }
    for (const Vec3 &row : p.t) {
        for (double x : row) {
            if (std::abs(x) > 1 + 1e-9) {
                throw std::invalid_argument("correlation entries must satisfy |t_ij| <= 1");
            }
        }
    }
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (PauliAxis i : kAllAxes) {
        m += kron(pauli(i), id) * p.r[i.slot()];
        m += kron(id, pauli(i)) * p.s[i.slot()];
        for (PauliAxis j : kAllAxes) {
            m += kron(pauli(i), pauli(j)) * p.t[i.slot()][j.slot()];
        }
    }
    m *= 0.25;
    return DensityMatrix::from_matrix(m);
}

TwoQubitBloch to_bloch(const DensityMatrix &rho) {
    if (rho.nqubits() != 2) {
        throw std::invalid_argument("to_bloch requires a two-qubit state");
    }
    const ComplexMatrix id = ComplexMatrix::identity(2);
    auto expect = [&](const ComplexMatrix &op) { return (rho.matrix() * op).trace().real(); };
    TwoQubitBloch out;
    for (PauliAxis i : kAllAxes) {
        out.r[i.slot()] = expect(kron(pauli(i), id));
        out.s[i.slot()] = expect(kron(id, pauli(i)));
        for (PauliAxis j : kAllAxes) {
            out.t[i.slot()][j.slot()] = expect(kron(pauli(i), pauli(j)));
        }
    }
    return out;
}

DensityMatrix pure_state(std::span<const cplx> amplitudes) {
    const size_t dim = amplitudes.size();
    ComplexMatrix m(dim);
    double norm_sq = 0;
    for (cplx a : amplitudes) {
        norm_sq += std::norm(a);
    }
    if (!(norm_sq > 0)) {
        throw InvalidStateError("pure_state: zero vector");
    }
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm_sq;
        }
    }
    return DensityMatrix::from_matrix(m);
}

DensityMatrix pure_alpha(double alpha) {
    require_unit_interval(alpha, "alpha");
    std::array<cplx, 4> psi{std::sqrt(alpha), 0, 0, std::sqrt(1 - alpha)};
    return pure_state(psi);
}

DensityMatrix ghz_alpha(double alpha) {
    require_unit_interval(alpha, "alpha");
    std::array<cplx, 8> psi{};
    psi[0] = alpha;
    psi[7] = std::sqrt(1 - alpha * alpha);
    return pure_state(psi);
}

DensityMatrix werner(double p) {
    require_unit_interval(p, "p");
    ComplexMatrix m = bell().matrix() * p + ComplexMatrix::identity(4) * ((1 - p) / 4);
    return DensityMatrix::from_matrix(m);
}

DensityMatrix bell() {
    const double h = 1 / std::numbers::sqrt2;
    std::array<cplx, 4> psi{h, 0, 0, h};
    return pure_state(psi);
}

DensityMatrix maximally_mixed(size_t nqubits) {
    require_nqubits(nqubits);
    const size_t dim = size_t{1} << nqubits;
    return DensityMatrix::from_matrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::PURE_ALPHA:
            return "pure_alpha";
        case Family::GHZ_ALPHA:
            return "ghz_alpha";
        case Family::WERNER:
            return "werner";
        case Family::BELL:
            return "bell";
        case Family::GENERAL_BLOCH:
            return "general_bloch";
    }
    throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (Family f : {Family::PURE_ALPHA, Family::GHZ_ALPHA, Family::WERNER, Family::BELL, Family::GENERAL_BLOCH}) {
        if (family_name(f) == lower) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

DensityMatrix make_state(const FamilySpec &spec) {
    switch (spec.family) {
        case Family::PURE_ALPHA:
            return pure_alpha(spec.parameter);
        case Family::GHZ_ALPHA:
            return ghz_alpha(spec.parameter);
        case Family::WERNER:
            return werner(spec.parameter);
        case Family::BELL:
            return bell();
        case Family::GENERAL_BLOCH:
            return from_bloch(spec.bloch);
    }
    throw std::invalid_argument("unknown family");
}

DensityMatrix random_pure(size_t nqubits, uint64_t seed) {
    require_nqubits(nqubits);
    const size_t dim = size_t{1} << nqubits;
    GaussianSource rng(seed);
    std::vector<cplx> psi(dim);
    for (cplx &a : psi) {
        double re = rng.normal();
        double im = rng.normal();
        a = cplx(re, im);
    }
    return pure_state(psi);
}

DensityMatrix random_mixed(size_t nqubits, size_t rank, uint64_t seed) {
    require_nqubits(nqubits);
    const size_t dim = size_t{1} << nqubits;
    if (rank < 1 || rank > dim) {
        throw std::invalid_argument("rank must lie in [1, " + std::to_string(dim) + "]");
    }
    GaussianSource rng(seed);
    std::vector<cplx> g(dim * rank);
    for (cplx &x : g) {
        double re = rng.normal();
        double im = rng.normal();
        x = cplx(re, im);
    }
    ComplexMatrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            cplx sum = 0;
            for (size_t k = 0; k < rank; k++) {
                sum += g[r * rank + k] * std::conj(g[c * rank + k]);
            }
            m(r, c) = sum;
        }
    }
    m *= 1.0 / m.trace().real();
    return DensityMatrix::from_matrix(m);
}

BlochQubit random_bloch_ball(uint64_t seed) {
    GaussianSource rng(seed);
    Vec3 dir{rng.normal(), rng.normal(), rng.normal()};
    double n = norm3(dir);
    double radius = std::cbrt(rng.uniform());
    for (double &x : dir) {
        x *= radius / n;
    }
    return BlochQubit::from_vector(dir);
}

DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const size_t> perm) {
    const size_t n = rho.nqubits();
    if (perm.size() != n) {
        throw std::invalid_argument("permutation length must equal the qubit count");
    }
    std::vector<bool> seen(n, false);
    for (size_t q : perm) {
        if (q >= n || seen[q]) {
            throw std::invalid_argument("invalid qubit permutation");
        }
        seen[q] = true;
    }
    // Bit for qubit q sits at position (n - 1 - q).
    auto map_index = [&](size_t old_index) {
        size_t out = 0;
        for (size_t k = 0; k < n; k++) {
            size_t bit = old_index >> (n - 1 - perm[k]) & 1;
            out |= bit << (n - 1 - k);
        }
        return out;
    };
    const ComplexMatrix &m = rho.matrix();
    ComplexMatrix out(m.dim());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out(map_index(r), map_index(c)) = m(r, c);
        }
    }
    return DensityMatrix::from_matrix(out);
}

}  // namespace naqc
