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

#ifndef NAQC_ERRORS_H
#define NAQC_ERRORS_H

#include <stdexcept>
#include <string>

namespace naqc {

/// Operand dimensions are incompatible or exceed the supported 8x8 limit.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix or Bloch vector is not a physical state (Hermiticity, trace, positivity, norm).
struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematically guaranteed bound was breached. Always a numerics bug, never physics.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace naqc

#endif
