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

#ifndef ENTLAB_PROTOCOL_TEXT_H
#define ENTLAB_PROTOCOL_TEXT_H

#include <string>

#include "entlab/protocol.h"

namespace entlab {

/// Parses the line-based protocol format:
///
///     LOCC v1; nA=2; nB=1; tA=0; tB=0; c=2; mA=0; mB=1
///     ROUND 1
///     A:
///       CNOT 0 1
///       ORACLE F_k 0..3
///     B:
///       CCX c1 0
///
/// Keywords are case-insensitive, `#` starts a comment, and qubit lists accept inclusive
/// ranges `a..b`. Oracle handles are case-sensitive and, when `oracles` is non-null, must
/// be registered there. Errors are reported as ParseError carrying the 1-based line.
LoccProtocol parse_protocol(const std::string &text, OracleRegistryPtr oracles = nullptr);

/// Canonical form: upper-case keywords, single spaces, two-space gate indent, ascending
/// runs of oracle qubits folded into ranges, no comments, trailing newline.
std::string serialize_protocol(const LoccProtocol &p);

}  // namespace entlab

#endif
