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

#ifndef ENTLAB_CERTIFICATE_H
#define ENTLAB_CERTIFICATE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entlab/report.h"

namespace entlab {

enum class CertificateKind { DistillLower, CostUpper };

struct SchedulePoint {
    int lambda = 0;
    int n = 0;
    int m = 0;
    int ell = 0;
    int bound = 0;
    double epsilon = 0.0;
};

struct KeySample {
    int count = 0;
    std::uint64_t seed = 0;
};

/// A claimed bound on a family, checked point by point over an explicit schedule.
///
///   distill-lower / phi / phi-distill:          bound = m, error = distillation error
///   cost-upper    / psi / psi-prep:             bound = n, error = dilution error
///   cost-upper    / oracle / teleport-dilution: bound = ell, error = dilution error
struct Certificate {
    CertificateKind kind = CertificateKind::DistillLower;
    std::string family;
    std::string protocol;
    std::vector<SchedulePoint> schedule;
    /// Used when a point's key space exceeds 2^12 (and always for oracle seeds).
    std::optional<KeySample> key_sample;

    static Certificate from_json(const std::string &text);
    std::string to_json() const;
};

inline constexpr int kExhaustiveKeyBits = 12;
inline constexpr double kCertificateSlack = 1e-9;

Report check_certificate(const Certificate &cert);

}  // namespace entlab

#endif
