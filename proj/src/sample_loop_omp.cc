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

#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

#include "sample_loop.h"

namespace naqc::detail {

namespace {

struct ThreadError {
    uint64_t index = std::numeric_limits<uint64_t>::max();
    std::exception_ptr error;

    void capture(uint64_t i) {
        if (i < index) {
            index = i;
            error = std::current_exception();
        }
    }
};

void rethrow_earliest(const std::vector<ThreadError> &errors) {
    const ThreadError *first = nullptr;
    for (const ThreadError &e : errors) {
        if (e.error && (first == nullptr || e.index < first->index)) {
            first = &e;
        }
    }
    if (first != nullptr) {
        std::rethrow_exception(first->error);
    }
}

}  // namespace

Tally tally_parallel(uint64_t n, const ProbeFn &probe) {
    const int threads = omp_get_max_threads();
    std::vector<Tally> partial(threads);
    std::vector<ThreadError> errors(threads);

#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        Tally local;
#pragma omp for schedule(dynamic, 16)
        for (int64_t i = 0; i < static_cast<int64_t>(n); i++) {
            try {
                local.add(static_cast<uint64_t>(i), probe(static_cast<uint64_t>(i)));
            } catch (...) {
                errors[tid].capture(static_cast<uint64_t>(i));
            }
        }
        partial[tid] = local;
    }

    rethrow_earliest(errors);
    Tally total;
    for (const Tally &t : partial) {
        total.merge(t);
    }
    return total;
}

Best argmax_parallel(uint64_t n, const ValueFn &value) {
    const int threads = omp_get_max_threads();
    std::vector<Best> partial(threads);
    std::vector<ThreadError> errors(threads);

#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        Best local;
#pragma omp for schedule(dynamic, 16)
        for (int64_t i = 0; i < static_cast<int64_t>(n); i++) {
            try {
                local.offer(static_cast<uint64_t>(i), value(static_cast<uint64_t>(i)));
            } catch (...) {
                errors[tid].capture(static_cast<uint64_t>(i));
            }
        }
        partial[tid] = local;
    }

    rethrow_earliest(errors);
    Best total;
    for (const Best &b : partial) {
        if (b.value != -std::numeric_limits<double>::infinity()) {
            total.offer(b.index, b.value);
        }
    }
    return total;
}

}  // namespace naqc::detail
