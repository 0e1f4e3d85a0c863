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

#ifndef NAQC_SUITES_H
#define NAQC_SUITES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naqc/coherence.h"
#include "naqc/qcore.h"

namespace naqc {

/// Monte-Carlo property suites and random searches. Every sample k draws from
/// its own generator seeded with derive_seed(master, k), so the parallel and
/// serial runs see identical states and reduce to identical results.
enum class Execution {
    kSerial,
    kParallel,
};

struct SuiteResult {
    std::string name;
    uint64_t samples = 0;
    uint64_t failures = 0;
    /// max over checks of (observed - bound); a check passes while this is <= tolerance.
    double worst_margin = 0;
    uint64_t worst_index = 0;
    double tolerance = 0;
    std::string description;

    bool passed() const {
        return failures == 0;
    }
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string_view> &suite_names();
uint64_t default_samples(std::string_view suite);

/// samples == 0 selects the suite's default size. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(std::string_view name, uint64_t seed, uint64_t samples = 0,
                      Execution exec = Execution::kParallel);
std::vector<SuiteResult> run_all_suites(uint64_t seed, Execution exec = Execution::kParallel);

/// Criterion names: single0..2, double01, double02, double12, triple (2 qubits); t1, t2, t3 (3 qubits).
const std::vector<std::string_view> &criterion_names(size_t nqubits);

struct SearchResult {
    std::string criterion;
    MeasureKind measure = MeasureKind::L1;
    size_t nqubits = 0;
    uint64_t samples = 0;
    double best_value = 0;
    double bound = 0;
    uint64_t best_index = 0;
    uint64_t best_seed = 0;
    /// "pure" or "mixed".
    std::string kind;
    std::optional<DensityMatrix> best_state;
};

/// Criterion value of `rho` by name; throws std::invalid_argument for unknown names.
double criterion_value(const DensityMatrix &rho, std::string_view criterion, MeasureKind measure);
double criterion_bound(std::string_view criterion, MeasureKind measure);

/// Samples alternate pure (even k) and full-rank mixed (odd k) states and keep
/// the maximum criterion value, earliest sample on ties.
SearchResult search(size_t nqubits, std::string_view criterion, MeasureKind measure, uint64_t samples,
                    uint64_t seed, Execution exec = Execution::kParallel);

/// The state drawn for search sample `index` under master seed `seed`.
DensityMatrix search_sample(size_t nqubits, uint64_t seed, uint64_t index);

}  // namespace naqc

#endif
