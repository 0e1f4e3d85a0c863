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

#include "naqc/steering.h"

#include <stdexcept>
#include <string>

namespace naqc {

namespace {

void require_qubits(const DensityMatrix &rho, size_t n, const char *op) {
    if (rho.nqubits() != n) {
        throw std::invalid_argument(std::string(op) + ": expected a " + std::to_string(n) + "-qubit state, got " +
                                    std::to_string(rho.nqubits()));
    }
}

void require_shift(int shift) {
    if (shift < 0 || shift > 2) {
        throw std::invalid_argument("shift index must be 0, 1 or 2");
    }
}

Criterion make_criterion(double value, double bound) {
    return Criterion{value, bound, value > bound + kViolationSlack};
}

void check_compensation(double part, double part_bound, double rest, double rest_bound, const char *label) {
    if (part > part_bound + kViolationSlack && rest > rest_bound + kBoundSlack) {
        throw ConsistencyError(std::string("decomposition ") + label + " violated on both sides");
    }
}

}  // namespace

std::array<ConditionalBranch, 2> conditional_states(const DensityMatrix &rho, PauliAxis axis) {
    require_qubits(rho, 2, "conditional_states");
    static constexpr std::array<size_t, 1> keep_bob{1};
    const ComplexMatrix id2 = ComplexMatrix::identity(2);

    auto branch = [&](Outcome a) {
        ComplexMatrix p = kron(projector(axis, a), id2);
        ComplexMatrix bob = partial_trace(p * rho.matrix() * p, keep_bob);
        double prob = bob.trace().real();
        if (prob < kBranchCutoff) {
            return ConditionalBranch{axis, a, 0.0, BlochQubit::maximally_mixed()};
        }
        Vec3 r = bloch_vector(bob);
        for (double &x : r) {
            x /= prob;
        }
        return ConditionalBranch{axis, a, prob, BlochQubit::from_vector(r)};
    };
    return {branch(Outcome(0)), branch(Outcome(1))};
}

ConditionalEnsemble conditional_ensemble(const DensityMatrix &rho) {
    return {conditional_states(rho, PauliAxis(1)), conditional_states(rho, PauliAxis(2)),
            conditional_states(rho, PauliAxis(3))};
}

double shift_value(const ConditionalEnsemble &ensemble, int shift, MeasureKind measure) {
    require_shift(shift);
    double total = 0;
    for (const auto &per_axis : ensemble) {
        for (const ConditionalBranch &b : per_axis) {
            if (b.probability > 0) {
                total += b.probability * coherence(b.state, b.axis.shifted(shift), measure);
            }
        }
    }
    return total;
}

double shift_value(const DensityMatrix &rho, int shift, MeasureKind measure) {
    return shift_value(conditional_ensemble(rho), shift, measure);
}

ShiftValues shift_values(const ConditionalEnsemble &ensemble, MeasureKind measure) {
    ShiftValues out{{}, measure};
    for (int j = 0; j < 3; j++) {
        out.s[j] = shift_value(ensemble, j, measure);
    }
    if (out.total() > 3 * epsilon(measure) + kBoundSlack) {
        throw ConsistencyError("shift values sum " + std::to_string(out.total()) + " exceeds 3*epsilon");
    }
    return out;
}

ShiftValues shift_values(const DensityMatrix &rho, MeasureKind measure) {
    return shift_values(conditional_ensemble(rho), measure);
}

Criterion criterion_single(const DensityMatrix &rho, int shift, MeasureKind measure) {
    return make_criterion(shift_value(rho, shift, measure), epsilon(measure));
}

Criterion criterion_double(const DensityMatrix &rho, int j, int k, MeasureKind measure) {
    require_shift(j);
    require_shift(k);
    if (j == k) {
        throw std::invalid_argument("criterion_double requires two distinct shifts");
    }
    ConditionalEnsemble ensemble = conditional_ensemble(rho);
    return make_criterion(shift_value(ensemble, j, measure) + shift_value(ensemble, k, measure),
                          2 * epsilon(measure));
}

Criterion criterion_triple(const DensityMatrix &rho, MeasureKind measure) {
    ShiftValues sv = shift_values(rho, measure);
    return make_criterion(sv.total(), 3 * epsilon(measure));
}

SteeringReport steering_report(const ConditionalEnsemble &ensemble, MeasureKind measure) {
    const double eps = epsilon(measure);
    const ShiftValues sv = shift_values(ensemble, measure);
    const auto &s = sv.s;

    SteeringReport report{sv, {}, {}, {}, {}};
    for (int j = 0; j < 3; j++) {
        report.singles[j] = make_criterion(s[j], eps);
    }
    static constexpr std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (size_t p = 0; p < pairs.size(); p++) {
        auto [j, k] = pairs[p];
        report.doubles[p] = DoubleCriterion{j, k, make_criterion(s[j] + s[k], 2 * eps)};
    }
    report.triple = make_criterion(sv.total(), 3 * eps);
    report.decompositions = Decompositions{
        s[0] + s[1] + s[2],
        (s[0] + s[1]) + s[2],
        (s[0] + s[2]) + s[1],
        (s[1] + s[2]) + s[0],
    };

    for (int j = 0; j < 3; j++) {
        check_compensation(s[j], eps, sv.total() - s[j], 2 * eps, "single+rest");
    }
    check_compensation(s[0] + s[1], 2 * eps, s[2], eps, "S01+S2");
    check_compensation(s[0] + s[2], 2 * eps, s[1], eps, "S02+S1");
    check_compensation(s[1] + s[2], 2 * eps, s[0], eps, "S12+S0");
    return report;
}

SteeringReport steering_report(const DensityMatrix &rho, MeasureKind measure) {
    return steering_report(conditional_ensemble(rho), measure);
}

std::array<TripartiteBranch, 6> tripartite_branches(const DensityMatrix &rho, MeasureKind measure) {
    require_qubits(rho, 3, "tripartite");
    static constexpr std::array<size_t, 2> keep_ab{0, 1};
    const ComplexMatrix id4 = ComplexMatrix::identity(4);

    std::array<TripartiteBranch, 6> out{
        TripartiteBranch{PauliAxis(1), Outcome(0), 0, {}}, TripartiteBranch{PauliAxis(1), Outcome(1), 0, {}},
        TripartiteBranch{PauliAxis(2), Outcome(0), 0, {}}, TripartiteBranch{PauliAxis(2), Outcome(1), 0, {}},
        TripartiteBranch{PauliAxis(3), Outcome(0), 0, {}}, TripartiteBranch{PauliAxis(3), Outcome(1), 0, {}},
    };
    for (TripartiteBranch &b : out) {
        b.shift = ShiftValues{{0, 0, 0}, measure};
        ComplexMatrix p = kron(id4, projector(b.axis, b.outcome));
        ComplexMatrix ab = partial_trace(p * rho.matrix() * p, keep_ab);
        double prob = ab.trace().real();
        if (prob < kBranchCutoff) {
            continue;
        }
        b.probability = prob;
        b.shift = shift_values(DensityMatrix::from_matrix(ab * (1.0 / prob)), measure);
    }
    return out;
}

TripartiteReport tripartite_report(const DensityMatrix &rho, MeasureKind measure) {
    const double eps = epsilon(measure);
    double t1 = 0;
    double t2 = 0;
    for (const TripartiteBranch &b : tripartite_branches(rho, measure)) {
        const int m = tripartite_shift(b.axis);
        for (int j = 0; j < 3; j++) {
            double term = b.probability * b.shift.s[j];
            if (j == m) {
                t1 += term;
            } else {
                t2 += term;
            }
        }
    }
    const double t3 = t1 + t2;
    if (t3 > 9 * eps + kBoundSlack) {
        throw ConsistencyError("tripartite t3 = " + std::to_string(t3) + " exceeds 9*epsilon");
    }
    return TripartiteReport{measure, make_criterion(t1, 3 * eps), make_criterion(t2, 6 * eps),
                            make_criterion(t3, 9 * eps)};
}

Criterion tripartite_t1(const DensityMatrix &rho, MeasureKind measure) {
    return tripartite_report(rho, measure).t1;
}

Criterion tripartite_t2(const DensityMatrix &rho, MeasureKind measure) {
    return tripartite_report(rho, measure).t2;
}

Criterion tripartite_t3(const DensityMatrix &rho, MeasureKind measure) {
    return tripartite_report(rho, measure).t3;
}

}  // namespace naqc
