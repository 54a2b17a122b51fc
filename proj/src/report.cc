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

#include "entlab/report.h"

#include <fstream>
#include <stdexcept>

namespace entlab {

nlohmann::json Report::payload() const {
    nlohmann::json j;
    j["schema"] = kReportSchemaId;
    j["experiment"] = experiment;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["points"] = points;
    j["pass"] = pass;
    j["note"] = note;
    return j;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j = payload();
    j["wall_clock_seconds"] = wall_clock_seconds;
    return j;
}

void write_report(const Report &report, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write report to " + path);
    }
    out << report.to_json().dump(2) << "\n";
}

}  // namespace entlab
