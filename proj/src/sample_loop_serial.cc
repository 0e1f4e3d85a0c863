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

#include "sample_loop.h"

namespace naqc::detail {

Tally tally_serial(uint64_t n, const ProbeFn &probe) {
    Tally t;
    for (uint64_t i = 0; i < n; i++) {
        t.add(i, probe(i));
    }
    return t;
}

Best argmax_serial(uint64_t n, const ValueFn &value) {
    Best b;
    for (uint64_t i = 0; i < n; i++) {
        b.offer(i, value(i));
    }
    return b;
}

}  // namespace naqc::detail
