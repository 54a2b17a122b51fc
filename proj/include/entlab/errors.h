// Copyright 2026 The entlab Authors
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

#ifndef ENTLAB_ERRORS_H
#define ENTLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace entlab {

/// Raised when an operation would exceed the simulator's qubit or branch budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on mismatched register widths, partitions, or bitstring lengths.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    ParseError(int line, const std::string &what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line(line) {
    }
    int line;
};

}  // namespace entlab

#endif
