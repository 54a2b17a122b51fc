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

#ifndef ENTLAB_REPORT_H
#define ENTLAB_REPORT_H

#include <cstdint>
#include <string>

#include "json.hpp"

namespace entlab {

inline constexpr const char *kReportSchemaId = "entlab-report/1";

/// Result of one experiment or certificate check.
struct Report {
    std::string experiment;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t seed = 0;
    nlohmann::json points = nlohmann::json::array();
    bool pass = false;
    std::string note;
    double wall_clock_seconds = 0.0;

    nlohmann::json to_json() const;
    /// Everything except the wall clock, for determinism checks.
    nlohmann::json payload() const;
};

void write_report(const Report &report, const std::string &path);

}  // namespace entlab

#endif
