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

#ifndef NAQC_CLI_H
#define NAQC_CLI_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "naqc/coherence.h"
#include "naqc/qcore.h"
#include "naqc/states.h"

namespace naqc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kIoError = 1,
    kParseError = 2,
    kInvalidState = 3,
    kConsistencyBreach = 4,
    kSuiteFailure = 5,
};

/// Malformed input document or command-line value.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exactly one of `dense` or `family` is set.
struct StateDocument {
    std::optional<ComplexMatrix> dense;
    std::optional<FamilySpec> family;
};

/// Parses {"nqubits": n, "re": [[...]], "im": [[...]]} or {"family": "...", "params": {...}}.
/// Throws ParseError.
StateDocument parse_state_document(std::string_view json_text);
/// Builds the state. Any physical or range failure is reported as InvalidStateError.
DensityMatrix decode_state(const StateDocument &doc);
/// Dense-block JSON for `rho`, suitable as input to parse_state_document.
std::string encode_dense(const DensityMatrix &rho);

/// "l1", "relent", "skew" or "all".
std::vector<MeasureKind> parse_measure_selector(std::string_view selector);

/// JSON report of every criterion for a 2- or 3-qubit state.
std::string cmd_evaluate(const StateDocument &doc, std::string_view measure_selector);

struct SweepOptions {
    Family family = Family::PURE_ALPHA;
    double from = 0;
    double to = 1;
    double step = 0.01;
    MeasureKind measure = MeasureKind::L1;
};

/// Grid from, from + step, ... up to `to` (inclusive within 1e-9 steps).
std::vector<double> sweep_grid(double from, double to, double step);
/// CSV text: header row then one row per grid point.
std::string sweep_csv(const SweepOptions &opts);
/// Writes sweep_csv to `path`; throws IoError.
void cmd_sweep(const SweepOptions &opts, const std::string &path);

/// 15 significant digits in scientific notation.
std::string format_number(double x);

/// JSON record of the best sample.
std::string cmd_search(size_t nqubits, std::string_view criterion, MeasureKind measure, uint64_t samples,
                       uint64_t seed);

struct CheckOutcome {
    std::string text;
    bool passed;
};

/// Runs one named suite, or every suite for "all". samples == 0 uses suite defaults.
CheckOutcome cmd_check(std::string_view suite, uint64_t seed, uint64_t samples = 0);

/// Maps the in-flight exception to the documented exit code.
int exit_code_for_current_exception();

}  // namespace naqc::cli

#endif
