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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "entlab/certificate.h"
#include "entlab/errors.h"
#include "entlab/experiments.h"
#include "entlab/protocol_text.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool read_file(const std::string &path, std::string &out) {
    std::ifstream in(path);
    if (!in) {
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int emit(const entlab::Report &report, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        entlab::write_report(report, out_path);
        std::cerr << report.experiment << ": " << (report.pass ? "PASS" : "FAIL") << " -> " << out_path << "\n";
    }
    return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"entlab: computational entanglement laboratory"};
    app.require_subcommand(1);

    entlab::ExperimentParams params;
    std::string run_id;
    std::string out_path;
    int n = 0, m = 0, lambda = 0, ell = 0;
    double eta = 0.0;
    long trials = 0;
    std::string mode;
    auto *run = app.add_subcommand("run", "run an experiment and write a report");
    run->add_option("id", run_id, "experiment id")->required();
    auto *opt_n = run->add_option("--n", n, "EPR pairs / qubits per side");
    auto *opt_m = run->add_option("--m", m, "register width");
    auto *opt_lambda = run->add_option("--lambda", lambda, "security parameter");
    auto *opt_ell = run->add_option("--ell", ell, "oracle half width");
    auto *opt_eta = run->add_option("--eta", eta, "net fidelity gap");
    auto *opt_trials = run->add_option("--trials", trials, "trials, keys, or protocols");
    run->add_option("--seed", params.seed, "random seed");
    auto *opt_mode = run->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    run->add_option("--out", out_path, "report file");

    std::string cert_path;
    std::string check_out;
    auto *check = app.add_subcommand("check", "check a certificate");
    check->add_option("certificate", cert_path, "certificate JSON")->required();
    check->add_option("--out", check_out, "report file");

    std::string proto_action;
    std::string proto_path;
    auto *proto = app.add_subcommand("protocol", "format or validate a protocol file");
    proto->add_option("action", proto_action, "fmt or validate")->required()->check(CLI::IsMember({"fmt", "validate"}));
    proto->add_option("file", proto_path, "protocol file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*run) {
            if (*opt_n) params.n = n;
            if (*opt_m) params.m = m;
            if (*opt_lambda) params.lambda = lambda;
            if (*opt_ell) params.ell = ell;
            if (*opt_eta) params.eta = eta;
            if (*opt_trials) params.trials = trials;
            if (*opt_mode) params.mode = mode;
            const auto &ids = entlab::experiment_ids();
            if (std::find(ids.begin(), ids.end(), run_id) == ids.end()) {
                std::cerr << "unknown experiment '" << run_id << "'; known:";
                for (const auto &id : ids) {
                    std::cerr << " " << id;
                }
                std::cerr << "\n";
                return kExitUsage;
            }
            return emit(entlab::run_experiment(run_id, params), out_path);
        }
        if (*check) {
            std::string text;
            if (!read_file(cert_path, text)) {
                std::cerr << "cannot read " << cert_path << "\n";
                return kExitUsage;
            }
            entlab::Certificate cert = entlab::Certificate::from_json(text);
            return emit(entlab::check_certificate(cert), check_out);
        }
        if (*proto) {
            std::string text;
            if (!read_file(proto_path, text)) {
                std::cerr << "cannot read " << proto_path << "\n";
                return kExitUsage;
            }
            entlab::LoccProtocol p;
            try {
                p = entlab::parse_protocol(text);
            } catch (const entlab::ParseError &e) {
                std::cerr << proto_path << ":" << e.line << ": " << e.what() << "\n";
                return kExitFail;
            }
            if (proto_action == "fmt") {
                std::cout << entlab::serialize_protocol(p);
                return kExitPass;
            }
            auto problems = entlab::validate(p);
            for (const auto &v : problems) {
                std::cout << v << "\n";
            }
            if (problems.empty()) {
                std::cout << "ok\n";
            }
            return problems.empty() ? kExitPass : kExitFail;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
