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

#ifndef ENTLAB_STATE_IO_H
#define ENTLAB_STATE_IO_H

#include <string>
#include <string_view>

#include "entlab/state.h"

namespace entlab {

/// Binary state fixture format, all integers and floats little-endian:
///   "QST1" | u32 n_a | u32 n_b | u32 kind (0 = pure, 1 = density)
///   then (f64 re, f64 im) pairs: 2^n amplitudes, or the 2^n x 2^n matrix row-major.
std::string serialize_state(const AnyState &state);
AnyState deserialize_state(std::string_view bytes);

}  // namespace entlab

#endif
