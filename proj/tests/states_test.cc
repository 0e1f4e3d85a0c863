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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "naqc/errors.h"

using namespace naqc;

namespace {

double min_eigenvalue(const DensityMatrix &rho) {
    return eig_hermitian(rho.matrix()).values.back();
}

TwoQubitBloch diagonal_t(double a, double b, double c) {
    TwoQubitBloch p;
    p.t[0][0] = a;
    p.t[1][1] = b;
    p.t[2][2] = c;
    return p;
}

}  // namespace

TEST(from_bloch, examples) {
    EXPECT_LT(from_bloch(TwoQubitBloch{}).matrix().max_abs_diff(maximally_mixed(2).matrix()), 1e-15);
    // Phi+ has correlation tensor diag(1, -1, 1).
    EXPECT_LT(from_bloch(diagonal_t(1, -1, 1)).matrix().max_abs_diff(bell().matrix()), 1e-15);
    EXPECT_THROW(from_bloch(diagonal_t(1, 1, 1)), InvalidStateError);

    TwoQubitBloch box;
    box.r = {1.5, 0, 0};
    EXPECT_THROW(from_bloch(box), std::invalid_argument);
}

TEST(to_bloch, ket00) {
    TwoQubitBloch b = to_bloch(pure_alpha(1.0));
    EXPECT_EQ(b.r, (Vec3{0, 0, 1}));
    EXPECT_EQ(b.s, (Vec3{0, 0, 1}));
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            EXPECT_EQ(b.t[i][j], i == 2 && j == 2 ? 1.0 : 0.0);
        }
    }
}

TEST(to_bloch, round_trip) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        DensityMatrix rho = random_mixed(2, 1 + seed % 4, seed);
        DensityMatrix back = from_bloch(to_bloch(rho));
        ASSERT_LT(back.matrix().max_abs_diff(rho.matrix()), 1e-12);
    }
}

TEST(pure_alpha, examples) {
    ComplexMatrix ket00 = ComplexMatrix::zeros(4);
    ket00(0, 0) = 1;
    ComplexMatrix ket11 = ComplexMatrix::zeros(4);
    ket11(3, 3) = 1;
    EXPECT_LT(pure_alpha(1).matrix().max_abs_diff(ket00), 1e-15);
    EXPECT_LT(pure_alpha(0).matrix().max_abs_diff(ket11), 1e-15);
    EXPECT_LT(pure_alpha(0.5).matrix().max_abs_diff(bell().matrix()), 1e-15);
    EXPECT_THROW(pure_alpha(-0.1), std::invalid_argument);
    EXPECT_THROW(pure_alpha(1.1), std::invalid_argument);
}

TEST(pure_alpha, schmidt_coefficients) {
    const std::array<size_t, 1> keep{0};
    for (int k = 0; k <= 10; k++) {
        const double alpha = k / 10.0;
        DensityMatrix rho = pure_alpha(alpha);
        EXPECT_NEAR(rho.purity(), 1, 1e-14);
        EigenSystem e = eig_hermitian(partial_trace(rho, keep).matrix());
        EXPECT_NEAR(e.values[0], std::max(alpha, 1 - alpha), 1e-14);
        EXPECT_NEAR(e.values[1], std::min(alpha, 1 - alpha), 1e-14);
    }
}

TEST(ghz_alpha, examples) {
    DensityMatrix ghz = ghz_alpha(1 / std::numbers::sqrt2);
    EXPECT_NEAR(ghz.matrix()(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(ghz.matrix()(0, 7).real(), 0.5, 1e-15);
    EXPECT_NEAR(ghz.matrix()(7, 7).real(), 0.5, 1e-15);
    EXPECT_EQ(ghz_alpha(1).matrix()(0, 0), cplx(1));
    // The parameter is the amplitude of |000>.
    EXPECT_NEAR(ghz_alpha(0.6).matrix()(0, 0).real(), 0.36, 1e-15);
    EXPECT_THROW(ghz_alpha(1.5), std::invalid_argument);
    EXPECT_THROW(ghz_alpha(-0.1), std::invalid_argument);
}

TEST(werner, examples) {
    EXPECT_LT(werner(1).matrix().max_abs_diff(bell().matrix()), 1e-15);
    EXPECT_LT(werner(0).matrix().max_abs_diff(maximally_mixed(2).matrix()), 1e-15);
    EXPECT_NEAR(min_eigenvalue(werner(0.5)), 0.125, 1e-14);
    EXPECT_THROW(werner(1.01), std::invalid_argument);
}

TEST(family, names_round_trip) {
    for (Family f : {Family::PURE_ALPHA, Family::GHZ_ALPHA, Family::WERNER, Family::BELL, Family::GENERAL_BLOCH}) {
        EXPECT_EQ(parse_family(family_name(f)), f);
    }
    EXPECT_EQ(parse_family("PURE_ALPHA"), Family::PURE_ALPHA);
    EXPECT_THROW(parse_family("cat"), std::invalid_argument);
}

TEST(family, make_state) {
    FamilySpec spec{Family::PURE_ALPHA, 0.3, {}};
    EXPECT_EQ(make_state(spec).matrix(), pure_alpha(0.3).matrix());
    spec = {Family::GENERAL_BLOCH, 0, diagonal_t(1, -1, 1)};
    EXPECT_LT(make_state(spec).matrix().max_abs_diff(bell().matrix()), 1e-15);
    spec = {Family::GHZ_ALPHA, 0.6, {}};
    EXPECT_EQ(make_state(spec).nqubits(), 3u);
}

TEST(pure_state, normalizes) {
    std::array<cplx, 4> amps{2, 0, 0, 2};
    EXPECT_LT(pure_state(amps).matrix().max_abs_diff(bell().matrix()), 1e-15);
    std::array<cplx, 3> bad{1, 0, 0};
    EXPECT_THROW(pure_state(bad), std::invalid_argument);
}

TEST(random_pure, properties) {
    for (size_t nq = 1; nq <= 3; nq++) {
        for (uint64_t seed = 0; seed < 100; seed++) {
            DensityMatrix rho = random_pure(nq, seed);
            ASSERT_NEAR(rho.purity(), 1, 1e-12);
            ASSERT_EQ(rho.matrix(), random_pure(nq, seed).matrix());
        }
        EXPECT_FALSE(random_pure(nq, 1).matrix() == random_pure(nq, 2).matrix());
    }
}

TEST(random_pure, single_qubit_is_isotropic) {
    // Haar pure qubits are uniform on the sphere, so the mean Bloch vector is ~0.
    Vec3 mean{0, 0, 0};
    const int n = 10000;
    for (int seed = 0; seed < n; seed++) {
        Vec3 r = bloch_of_qubit(random_pure(1, seed)).r();
        for (size_t k = 0; k < 3; k++) {
            mean[k] += r[k] / n;
        }
    }
    EXPECT_LT(std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]), 0.05);
}

TEST(random_mixed, rank) {
    EXPECT_NEAR(random_mixed(2, 1, 3).purity(), 1, 1e-12);
    EXPECT_GT(min_eigenvalue(random_mixed(2, 4, 3)), 0);
    EXPECT_NEAR(eig_hermitian(random_mixed(3, 2, 3).matrix()).values[2], 0, 1e-12);
    EXPECT_EQ(random_mixed(2, 4, 9).matrix(), random_mixed(2, 4, 9).matrix());
    EXPECT_THROW(random_mixed(2, 0, 1), std::invalid_argument);
    EXPECT_THROW(random_mixed(2, 5, 1), std::invalid_argument);
}

TEST(random_mixed, always_valid) {
    for (size_t nq = 1; nq <= 3; nq++) {
        const size_t dim = size_t{1} << nq;
        for (size_t rank = 1; rank <= dim; rank++) {
            for (uint64_t seed = 0; seed < 10000; seed++) {
                DensityMatrix rho = random_mixed(nq, rank, seed);
                ASSERT_NEAR(rho.matrix().trace().real(), 1, 1e-10);
                ASSERT_LT(rho.matrix().hermiticity_defect(), 1e-10);
            }
        }
    }
}

TEST(random_bloch_ball, inside_ball) {
    double mean_norm = 0;
    for (uint64_t seed = 0; seed < 10000; seed++) {
        double n = random_bloch_ball(seed).norm();
        ASSERT_LE(n, 1);
        mean_norm += n / 10000;
    }
    // E|r| = 3/4 for the uniform ball.
    EXPECT_NEAR(mean_norm, 0.75, 0.01);
}

TEST(permute_qubits, examples) {
    DensityMatrix a = random_mixed(1, 2, 11);
    DensityMatrix b = random_mixed(1, 2, 12);
    DensityMatrix ab = DensityMatrix::from_matrix(kron(a.matrix(), b.matrix()));
    DensityMatrix ba = DensityMatrix::from_matrix(kron(b.matrix(), a.matrix()));
    const std::array<size_t, 2> id{0, 1}, swap{1, 0};
    EXPECT_EQ(permute_qubits(ab, id).matrix(), ab.matrix());
    EXPECT_LT(permute_qubits(ab, swap).matrix().max_abs_diff(ba.matrix()), 1e-15);

    const std::array<size_t, 2> dup{0, 0};
    const std::array<size_t, 3> wrong{0, 1, 2};
    EXPECT_THROW(permute_qubits(ab, dup), std::invalid_argument);
    EXPECT_THROW(permute_qubits(ab, wrong), std::invalid_argument);
}

TEST(permute_qubits, preserves_spectrum) {
    const std::array<size_t, 3> cycle{2, 0, 1};
    for (uint64_t seed = 0; seed < 100; seed++) {
        DensityMatrix rho = random_mixed(3, 3, seed);
        auto before = eig_hermitian(rho.matrix()).values;
        auto after = eig_hermitian(permute_qubits(rho, cycle).matrix()).values;
        for (size_t k = 0; k < 8; k++) {
            ASSERT_NEAR(before[k], after[k], 1e-12);
        }
    }
}
