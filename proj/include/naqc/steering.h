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

#ifndef NAQC_STEERING_H
#define NAQC_STEERING_H

#include <array>

#include "naqc/coherence.h"
#include "naqc/qcore.h"

namespace naqc {

/// Branches below this probability are dropped (probability 0, placeholder state).
constexpr double kBranchCutoff = 1e-12;
/// Slack on strict violation flags.
constexpr double kViolationSlack = 1e-12;
/// Slack on bounds that must hold for every state.
constexpr double kBoundSlack = 1e-9;

/// Bob's normalized state after Alice measures `axis` and sees `outcome`.
struct ConditionalBranch {
    PauliAxis axis;
    Outcome outcome;
    double probability;
    BlochQubit state;
};

/// Both outcomes for each of Alice's three Pauli measurements, indexed [axis.slot()][outcome].
using ConditionalEnsemble = std::array<std::array<ConditionalBranch, 2>, 3>;

/// Alice is qubit A (first tensor factor); Bob's state is the second factor.
std::array<ConditionalBranch, 2> conditional_states(const DensityMatrix &rho, PauliAxis axis);
ConditionalEnsemble conditional_ensemble(const DensityMatrix &rho);

/// S^B_j: sum over Alice axes i and outcomes a of p * C(conditional, axis i shifted by j).
double shift_value(const ConditionalEnsemble &ensemble, int shift, MeasureKind measure);
double shift_value(const DensityMatrix &rho, int shift, MeasureKind measure);

struct ShiftValues {
    std::array<double, 3> s;
    MeasureKind measure;

    double total() const {
        return s[0] + s[1] + s[2];
    }
};

/// All three shift values. Throws ConsistencyError if their sum exceeds 3 eps + 1e-9.
ShiftValues shift_values(const ConditionalEnsemble &ensemble, MeasureKind measure);
ShiftValues shift_values(const DensityMatrix &rho, MeasureKind measure);

struct Criterion {
    double value;
    double bound;
    bool violated;
};

/// S^B_j <= eps. j = 0 is the one-setting criterion; j = 1, 2 are its generalizations.
Criterion criterion_single(const DensityMatrix &rho, int shift, MeasureKind measure);
/// S^B_j + S^B_k <= 2 eps for j != k.
Criterion criterion_double(const DensityMatrix &rho, int j, int k, MeasureKind measure);
/// S^B_0 + S^B_1 + S^B_2 <= 3 eps. Holds for every state; a breach throws ConsistencyError.
Criterion criterion_triple(const DensityMatrix &rho, MeasureKind measure);

struct DoubleCriterion {
    int j;
    int k;
    Criterion criterion;
};

/// The four regroupings of S^B_012.
struct Decompositions {
    double s0_s1_s2;
    double s01_s2;
    double s02_s1;
    double s12_s0;
};

struct SteeringReport {
    ShiftValues shift;
    std::array<Criterion, 3> singles;
    /// Pairs (0,1), (0,2), (1,2), in that order.
    std::array<DoubleCriterion, 3> doubles;
    Criterion triple;
    Decompositions decompositions;
};

/// Every bipartite criterion for one state and measure. Throws ConsistencyError
/// if a violated part of any decomposition is not compensated by its complement.
SteeringReport steering_report(const DensityMatrix &rho, MeasureKind measure);
SteeringReport steering_report(const ConditionalEnsemble &ensemble, MeasureKind measure);

/// Shift index paired with Charlie's axis in the first tripartite inequality: i mod 3.
constexpr int tripartite_shift(PauliAxis charlie_axis) {
    return charlie_axis.index() % 3;
}

/// Alice-Bob state after Charlie (third factor) measures `axis` with `outcome`.
struct TripartiteBranch {
    PauliAxis axis;
    Outcome outcome;
    double probability;
    /// Shift values of the conditional two-qubit state; zero when the branch is dropped.
    ShiftValues shift;
};

std::array<TripartiteBranch, 6> tripartite_branches(const DensityMatrix &rho, MeasureKind measure);

struct TripartiteReport {
    MeasureKind measure;
    Criterion t1;
    Criterion t2;
    Criterion t3;
};

/// sum_{i,c} p(c|i) S^B_{m(i)}(rho_AB|i,c) <= 3 eps.
Criterion tripartite_t1(const DensityMatrix &rho, MeasureKind measure);
/// sum_{i,c} sum_{j != m(i)} p(c|i) S^B_j(rho_AB|i,c) <= 6 eps.
Criterion tripartite_t2(const DensityMatrix &rho, MeasureKind measure);
/// t1 + t2 <= 9 eps, for every state; a breach throws ConsistencyError.
Criterion tripartite_t3(const DensityMatrix &rho, MeasureKind measure);
TripartiteReport tripartite_report(const DensityMatrix &rho, MeasureKind measure);

}  // namespace naqc

#endif
