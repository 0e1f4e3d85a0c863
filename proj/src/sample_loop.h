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

#ifndef NAQC_SAMPLE_LOOP_H
#define NAQC_SAMPLE_LOOP_H

#include <cstdint>
#include <functional>
#include <limits>

namespace naqc::detail {

/// Outcome of checking one sample. margin = observed - bound.
struct Probe {
    double margin;
    bool ok;
};

/// Order-independent reduction over probes; ties on the worst margin go to the lowest index.
struct Tally {
    uint64_t count = 0;
    uint64_t failures = 0;
    double worst_margin = -std::numeric_limits<double>::infinity();
    uint64_t worst_index = 0;

    void add(uint64_t index, const Probe &p) {
        count++;
        failures += p.ok ? 0 : 1;
        if (p.margin > worst_margin || (p.margin == worst_margin && index < worst_index)) {
            worst_margin = p.margin;
            worst_index = index;
        }
    }

    void merge(const Tally &other) {
        count += other.count;
        failures += other.failures;
        if (other.count > 0 && (other.worst_margin > worst_margin ||
                                (other.worst_margin == worst_margin && other.worst_index < worst_index))) {
            worst_margin = other.worst_margin;
            worst_index = other.worst_index;
        }
    }
};

/// Maximum value over samples, lowest index on ties.
struct Best {
    double value = -std::numeric_limits<double>::infinity();
    uint64_t index = 0;

    void offer(uint64_t i, double v) {
        if (v > value || (v == value && i < index)) {
            value = v;
            index = i;
        }
    }
};

using ProbeFn = std::function<Probe(uint64_t)>;
using ValueFn = std::function<double(uint64_t)>;

/// Reference loops, kept for testing the parallel versions.
Tally tally_serial(uint64_t n, const ProbeFn &probe);
Best argmax_serial(uint64_t n, const ValueFn &value);

/// OpenMP loops. An exception thrown by any sample is rethrown after the
/// region; if several samples throw, the one with the lowest index wins.
Tally tally_parallel(uint64_t n, const ProbeFn &probe);
Best argmax_parallel(uint64_t n, const ValueFn &value);

}  // namespace naqc::detail

#endif
