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

#ifndef NAQC_COHERENCE_H
#define NAQC_COHERENCE_H

#include <array>
#include <string_view>

#include "naqc/qcore.h"

namespace naqc {

enum class MeasureKind {
    L1,
    RELATIVE_ENTROPY,
    SKEW_INFORMATION,
};

inline constexpr std::array<MeasureKind, 3> kAllMeasures{MeasureKind::L1, MeasureKind::RELATIVE_ENTROPY,
                                                         MeasureKind::SKEW_INFORMATION};

/// Supremum of the coherence summed over the three Pauli bases:
/// sqrt(6) for l1, 3 h2((1 + 1/sqrt(3))/2) for relative entropy, 2 for skew information.
double epsilon(MeasureKind measure);

/// Short CLI name: "l1", "relent" or "skew".
std::string_view measure_name(MeasureKind measure);
/// Inverse of measure_name; throws std::invalid_argument.
MeasureKind parse_measure(std::string_view name);

/// Binary entropy in bits, with 0 log 0 = 0.
double binary_entropy(double p);

/// Sum of off-diagonal moduli in the sigma_axis eigenbasis.
double c_l1(const BlochQubit &state, PauliAxis axis);
/// Entropy of the sigma_axis-dephased state minus entropy of the state (bits).
double c_relent(const BlochQubit &state, PauliAxis axis);
/// Wigner-Yanase skew information I(rho, sigma_axis).
double c_skew(const BlochQubit &state, PauliAxis axis);

double coherence(const BlochQubit &state, PauliAxis axis, MeasureKind measure);

struct CoherenceTriple {
    std::array<double, 3> values;
    MeasureKind measure;

    double sum() const {
        return values[0] + values[1] + values[2];
    }
};

/// Coherence in each of the three Pauli bases. Throws ConsistencyError if the
/// sum exceeds epsilon(measure) + 1e-9.
CoherenceTriple coherence_triple(const BlochQubit &state, MeasureKind measure);

}  // namespace naqc

#endif
