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

#ifndef NAQC_STATES_H
#define NAQC_STATES_H

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "naqc/qcore.h"

namespace naqc {

/// (r, s, T) parameterization of a two-qubit operator:
/// (1/4)(I + r.sigma x I + I x s.sigma + sum_ij t_ij sigma_i x sigma_j).
struct TwoQubitBloch {
    Vec3 r{};
    Vec3 s{};
    std::array<Vec3, 3> t{};
};

/// Throws std::invalid_argument on box-constraint violations and
/// InvalidStateError when the reconstructed matrix is not positive.
DensityMatrix from_bloch(const TwoQubitBloch &p);
TwoQubitBloch to_bloch(const DensityMatrix &rho);

/// sqrt(alpha)|00> + sqrt(1 - alpha)|11>.
DensityMatrix pure_alpha(double alpha);
/// alpha|000> + sqrt(1 - alpha^2)|111>. Note the amplitude, not its square root.
DensityMatrix ghz_alpha(double alpha);
/// p |Phi+><Phi+| + (1 - p) I/4.
DensityMatrix werner(double p);
/// (|00> + |11>)/sqrt(2).
DensityMatrix bell();
DensityMatrix maximally_mixed(size_t nqubits);

/// Projector onto a normalized copy of `amplitudes` (length 2, 4 or 8).
DensityMatrix pure_state(std::span<const cplx> amplitudes);

enum class Family {
    PURE_ALPHA,
    GHZ_ALPHA,
    WERNER,
    BELL,
    GENERAL_BLOCH,
};

std::string_view family_name(Family family);
/// Case-insensitive; throws std::invalid_argument.
Family parse_family(std::string_view name);

struct FamilySpec {
    Family family = Family::BELL;
    /// alpha for PURE_ALPHA and GHZ_ALPHA, p for WERNER.
    double parameter = 0;
    /// Only read for GENERAL_BLOCH.
    TwoQubitBloch bloch{};
};

DensityMatrix make_state(const FamilySpec &spec);

/// Haar-random pure state, deterministic in `seed`.
DensityMatrix random_pure(size_t nqubits, uint64_t seed);
/// G G^dagger / tr(G G^dagger) with G a dim x rank complex Ginibre matrix.
DensityMatrix random_mixed(size_t nqubits, size_t rank, uint64_t seed);

/// Bloch vector uniform in the unit ball.
BlochQubit random_bloch_ball(uint64_t seed);

/// New qubit k is old qubit perm[k].
DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const size_t> perm);

}  // namespace naqc

#endif
