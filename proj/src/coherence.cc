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

#include "naqc/coherence.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace naqc {

double binary_entropy(double p) {
    double h = 0;
    if (p > 0) {
        h -= p * std::log2(p);
    }
    if (p < 1) {
        h -= (1 - p) * std::log2(1 - p);
    }
    return h;
}

double epsilon(MeasureKind measure) {
    static const double relent_bound = 3 * binary_entropy((1 + 1 / std::sqrt(3.0)) / 2);
    switch (measure) {
        case MeasureKind::L1:
            return std::sqrt(6.0);
        case MeasureKind::RELATIVE_ENTROPY:
            return relent_bound;
        case MeasureKind::SKEW_INFORMATION:
            return 2.0;
    }
    throw std::invalid_argument("unknown measure");
}

std::string_view measure_name(MeasureKind measure) {
    switch (measure) {
        case MeasureKind::L1:
            return "l1";
        case MeasureKind::RELATIVE_ENTROPY:
            return "relent";
        case MeasureKind::SKEW_INFORMATION:
            return "skew";
    }
    throw std::invalid_argument("unknown measure");
}

MeasureKind parse_measure(std::string_view name) {
    for (MeasureKind m : kAllMeasures) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown measure '" + std::string(name) + "' (expected l1, relent or skew)");
}

double c_l1(const BlochQubit &state, PauliAxis axis) {
    const Vec3 &r = state.r();
    double transverse_sq = 0;
    for (PauliAxis other : kAllAxes) {
        if (other != axis) {
            transverse_sq += r[other.slot()] * r[other.slot()];
        }
    }
    return std::sqrt(transverse_sq);
}

double c_relent(const BlochQubit &state, PauliAxis axis) {
    double norm = std::min(state.norm(), 1.0);
    double along = std::clamp(state.component(axis), -1.0, 1.0);
    return std::max(0.0, binary_entropy((1 + along) / 2) - binary_entropy((1 + norm) / 2));
}

double c_skew(const BlochQubit &state, PauliAxis axis) {
    double norm = state.norm();
    if (norm < 1e-12) {
        return 0;
    }
    double lambda_plus = (1 + std::min(norm, 1.0)) / 2;
    // Below 1e-15 the smaller eigenvalue is indistinguishable from round-off on a pure state.
    double lambda_minus = (1 - norm) / 2;
    if (lambda_minus < 1e-15) {
        lambda_minus = 0;
    }
    double gap = std::sqrt(lambda_plus) - std::sqrt(lambda_minus);
    double along = state.component(axis) / norm;
    return gap * gap * std::max(0.0, 1 - along * along);
}

double coherence(const BlochQubit &state, PauliAxis axis, MeasureKind measure) {
    switch (measure) {
        case MeasureKind::L1:
            return c_l1(state, axis);
        case MeasureKind::RELATIVE_ENTROPY:
            return c_relent(state, axis);
        case MeasureKind::SKEW_INFORMATION:
            return c_skew(state, axis);
    }
    throw std::invalid_argument("unknown measure");
}

CoherenceTriple coherence_triple(const BlochQubit &state, MeasureKind measure) {
    CoherenceTriple out{{}, measure};
    for (PauliAxis axis : kAllAxes) {
        out.values[axis.slot()] = coherence(state, axis, measure);
    }
    if (out.sum() > epsilon(measure) + 1e-9) {
        throw ConsistencyError("coherence triple " + std::to_string(out.sum()) + " exceeds bound " +
                               std::to_string(epsilon(measure)));
    }
    return out;
}

}  // namespace naqc
