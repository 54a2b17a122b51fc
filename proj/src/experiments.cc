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

#include "entlab/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "entlab/commit_game.h"
#include "entlab/constructions.h"
#include "entlab/errors.h"
#include "entlab/execute.h"
#include "entlab/measures.h"
#include "entlab/net.h"
#include "entlab/protocol_text.h"
#include "entlab/prp.h"

namespace entlab {

namespace {

using nlohmann::json;

constexpr double kExact = 1e-9;
constexpr const char *kFiniteNote =
    "Results hold at the listed finite parameters only. Finite values do not carry meaning for asymptotic "
    "statements, and measured advantages are not security claims.";

EvalMode parse_mode(const ExperimentParams &p) {
    std::string m = p.mode.value_or("exact");
    if (m == "exact") {
        return EvalMode::Exact;
    }
    if (m == "sampled") {
        return EvalMode::Sampled;
    }
    throw std::invalid_argument("mode must be exact or sampled");
}

json error_json(const ErrorReport &r) {
    return {{"value", r.value}, {"mode", eval_mode_name(r.mode)}, {"trials", r.trials}, {"std_error", r.std_error}};
}

bool error_within(const ErrorReport &r, double bound) {
    return r.value <= bound + kExact + 4.0 * r.std_error;
}

void entropy_gap(const ExperimentParams &p, Report &r) {
    int n = p.n.value_or(2);
    int m = p.m.value_or(4);
    long keys = p.trials.value_or(20);
    r.parameters = {{"n", n}, {"m", m}, {"keys", keys}};
    std::mt19937_64 rng(p.seed);
    r.pass = true;
    for (long k = 0; k < keys; k++) {
        Bits psi_key = random_bits(2 * m, rng);
        Bits phi_key = random_bits(m, rng);
        double e_psi = entanglement_entropy(make_psi_k(n, m, psi_key));
        double e_phi = entanglement_entropy(make_phi_k(m, phi_key));
        bool ok = std::abs(e_psi - n) <= kExact && std::abs(e_phi - m) <= kExact;
        r.pass = r.pass && ok;
        r.points.push_back({{"psi_key", bits_to_hex(psi_key)},
                            {"phi_key", bits_to_hex(phi_key)},
                            {"entropy_psi", e_psi},
                            {"entropy_phi", e_phi},
                            {"pass", ok}});
    }
}

void psi_prep(const ExperimentParams &p, Report &r) {
    int n = p.n.value_or(2);
    int m = p.m.value_or(4);
    long keys = p.trials.value_or(20);
    EvalMode mode = parse_mode(p);
    r.parameters = {{"n", n}, {"m", m}, {"keys", keys}, {"mode", eval_mode_name(mode)}};
    std::mt19937_64 rng(p.seed);
    r.pass = true;
    long wrong_large = 0;
    double wrong_min = 1.0;
    for (long k = 0; k < keys; k++) {
        Bits key = random_bits(2 * m, rng);
        Bits other = random_bits(2 * m, rng);
        LoccProtocol proto = psi_preparation_protocol(n, m, key);
        PureState target = make_psi_k(n, m, key);
        ErrorReport err = dilution_error(proto, target, n, mode, SampleOptions{1000, rng()});
        ProtocolCost cost = circuit_size(proto);
        bool one_way = is_one_way(proto);
        bool ok = error_within(err, 0.0) && cost.epr_inputs == n && cost.comm_bits == 0 && one_way;
        double wrong = dilution_error(psi_preparation_protocol(n, m, other), target, n, EvalMode::Exact).value;
        if (other != key) {
            wrong_min = std::min(wrong_min, wrong);
            wrong_large += wrong >= 0.5 ? 1 : 0;
        }
        r.pass = r.pass && ok;
        r.points.push_back({{"key", bits_to_hex(key)},
                            {"dilution_error", error_json(err)},
                            {"epr_inputs", cost.epr_inputs},
                            {"gate_count", cost.gate_count},
                            {"comm_bits", cost.comm_bits},
                            {"one_way", one_way},
                            {"entropy", entanglement_entropy(target)},
                            {"wrong_key_error", wrong},
                            {"pass", ok}});
    }
    r.parameters["wrong_key_min_error"] = wrong_min;
    r.parameters["wrong_key_fraction_at_least_half"] = static_cast<double>(wrong_large) / static_cast<double>(keys);
}

void phi_distill(const ExperimentParams &p, Report &r) {
    int n = p.n.value_or(2);
    int m = p.m.value_or(4);
    long keys = p.trials.value_or(20);
    EvalMode mode = parse_mode(p);
    r.parameters = {{"n", n}, {"m", m}, {"keys", keys}, {"mode", eval_mode_name(mode)}};
    std::mt19937_64 rng(p.seed);
    r.pass = true;
    for (long k = 0; k < keys; k++) {
        Bits key = random_bits(m, rng);
        LoccProtocol proto = phi_distillation_protocol(m, key);
        ErrorReport err = distillation_error(proto, ProtocolInput(make_phi_k(m, key)), m, mode, SampleOptions{1000, rng()});
        bool ok = error_within(err, 0.0);
        json pt = {{"key", bits_to_hex(key)},
                   {"distillation_error", error_json(err)},
                   {"gate_count", circuit_size(proto).gate_count},
                   {"pass", ok}};
        if (m > n) {
            Bits psi_key = random_bits(2 * m, rng);
            pt["error_on_psi"] =
                distillation_error(proto, ProtocolInput(make_psi_k(n, m, psi_key)), m, EvalMode::Exact).value;
        }
        r.pass = r.pass && ok;
        r.points.push_back(pt);
    }
}

void oracle_state(const ExperimentParams &p, Report &r) {
    int lambda = p.lambda.value_or(3);
    int ell = p.ell.value_or(4);
    r.parameters = {{"lambda", lambda}, {"ell", ell}};
    std::uint64_t idx = find_injective_oracle_seed(lambda, ell, p.seed);
    RandomOracle oracle(lambda, 2 * ell, oracle_seed_bits(idx));
    OracleState st = make_oracle_state(lambda, ell, oracle);
    int cost = exact_pure_cost(st.state);
    double entropy = entanglement_entropy(st.state);

    LocalPreparation prep = oracle_state_local_prep(lambda, ell, oracle);
    Vector zero = Vector::Unit(Eigen::Index{1} << prep.circuit.width, 0);
    Vector out = run_circuit(prep.circuit, zero, prep.oracles.get());
    Eigen::Index tail = Eigen::Index{1} << (2 * ell);
    double x_zero_weight = out.head(tail).squaredNorm();
    double prep_fidelity = std::norm(st.state.amplitudes().dot(out.head(tail)));

    LoccProtocol dil = oracle_dilution_protocol(lambda, ell, oracle);
    ErrorReport err = dilution_error(dil, st.state, ell, EvalMode::Exact);
    ProtocolCost pc = circuit_size(dil);

    bool ok = st.injective_halves() && cost == lambda && std::abs(entropy - lambda) <= kExact &&
              prep_fidelity >= 1.0 - kExact && x_zero_weight >= 1.0 - kExact && err.value <= kExact;
    r.pass = ok;
    r.points.push_back({{"oracle_seed", bits_to_hex(oracle_seed_bits(idx))},
                        {"injective_halves", st.injective_halves()},
                        {"exact_pure_cost", cost},
                        {"entropy", entropy},
                        {"local_prep_fidelity", prep_fidelity},
                        {"x_register_zero_weight", x_zero_weight},
                        {"local_prep_gates", prep.circuit.gates.size()},
                        {"dilution_error", error_json(err)},
                        {"dilution_epr_inputs", pc.epr_inputs},
                        {"dilution_comm_bits", pc.comm_bits},
                        {"dilution_gate_count", pc.gate_count},
                        {"one_way", is_one_way(dil)},
                        {"pass", ok}});
}

void teleport_cost(const ExperimentParams &p, Report &r) {
    int max_ell = p.ell.value_or(2);
    r.parameters = {{"ell_max", max_ell}};
    std::mt19937_64 rng(p.seed);
    r.pass = true;
    for (int ell = 1; ell <= max_ell; ell++) {
        LoccProtocol proto = teleportation_protocol(ell);
        PureState payload = random_pure_state(ell, 0, rng);
        PureState target(0, ell, payload.amplitudes());
        double worst = 1.0;
        auto branches = execute_branches(proto, ProtocolInput(tensor(payload, epr_pairs(ell))));
        double total = 0.0;
        for (const auto &b : branches) {
            worst = std::min(worst, fidelity_with_pure(b.state, target));
            total += b.probability;
        }
        ProtocolCost cost = circuit_size(proto);
        bool ok = worst >= 1.0 - kExact && std::abs(total - 1.0) <= kExact && cost.comm_bits == 2 * ell &&
                  cost.epr_inputs == ell && is_one_way(proto);
        r.pass = r.pass && ok;
        r.points.push_back({{"ell", ell},
                            {"branches", branches.size()},
                            {"min_fidelity", worst},
                            {"comm_bits", cost.comm_bits},
                            {"epr_inputs", cost.epr_inputs},
                            {"gate_count", cost.gate_count},
                            {"one_way", is_one_way(proto)},
                            {"pass", ok}});
    }
}

void commit_game(const ExperimentParams &p, Report &r) {
    int n = p.n.value_or(2);
    int m = p.m.value_or(n);
    int lambda = p.lambda.value_or(1);
    long trials = p.trials.value_or(10000);
    if (m != n) {
        throw std::invalid_argument("commit-game distills exactly n pairs; use m = n");
    }
    r.parameters = {{"n", n}, {"m", m}, {"lambda", lambda}, {"trials", trials}};
    CommitPair pair = make_commit_pair(lambda, n);
    LoccProtocol dist = commit_distiller_protocol(n);
    std::mt19937_64 rng(p.seed);
    GameResult on_rho = distinguisher_game(dist, pair.rho, m, trials, rng());
    GameResult on_sigma = distinguisher_game(dist, pair.sigma, m, trials, rng());
    double separable = std::pow(2.0, -m);
    double two_pow_minus_2m = std::pow(2.0, -2 * m);
    bool ok = on_rho.acceptance >= 0.99 && on_sigma.acceptance <= separable + 4.0 * on_sigma.std_error;
    r.pass = ok;
    r.points.push_back({{"acceptance_rho", on_rho.acceptance},
                        {"std_error_rho", on_rho.std_error},
                        {"acceptance_sigma", on_sigma.acceptance},
                        {"std_error_sigma", on_sigma.std_error},
                        {"separable_bound", separable},
                        {"bound_2_pow_minus_2m", two_pow_minus_2m},
                        {"sigma_below_2_pow_minus_2m", on_sigma.acceptance <= two_pow_minus_2m},
                        {"gap", on_rho.acceptance - on_sigma.acceptance},
                        {"pass", ok}});
}

void net_properties(const ExperimentParams &p, Report &r) {
    int n = p.n.value_or(1);
    double eta = p.eta.value_or(0.5);
    long max_failures = p.trials.value_or(200);
    r.parameters = {{"n", n}, {"eta", eta}, {"max_failures", max_failures}};
    NetFamily net = build_net(n, eta, p.seed, max_failures);
    double max_fid = 0.0;
    for (size_t i = 0; i < net.members.size(); i++) {
        for (size_t j = i + 1; j < net.members.size(); j++) {
            max_fid = std::max(max_fid, fidelity_with_pure(net.members[i], net.members[j]));
        }
    }
    size_t pads = size_t{1} << (2 * n);
    double dim = std::pow(2.0, 2 * n);
    double max_mix_dev = 0.0;
    for (size_t start : net.batch_starts) {
        Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (size_t k = 0; k < pads; k++) {
            const Vector &v = net.members[start + k].amplitudes();
            acc += v * v.adjoint() / static_cast<double>(pads);
        }
        Matrix id = Matrix::Identity(acc.rows(), acc.cols()) / dim;
        max_mix_dev = std::max(max_mix_dev, (acc - id).norm());
    }
    double max_entropy_dev = 0.0;
    for (const auto &mbr : net.members) {
        max_entropy_dev = std::max(max_entropy_dev, std::abs(entanglement_entropy(mbr) - n));
    }
    bool ok = net.batch_starts.size() >= 3 && max_fid <= 1.0 - eta + kExact && max_mix_dev <= kExact &&
              max_entropy_dev <= kExact;
    r.pass = ok;
    r.points.push_back({{"batches", net.batch_starts.size()},
                        {"members", net.members.size()},
                        {"draws", net.draws},
                        {"failures", net.failures},
                        {"max_pairwise_fidelity", max_fid},
                        {"max_batch_mixture_deviation", max_mix_dev},
                        {"max_entropy_deviation", max_entropy_dev},
                        {"pass", ok}});
}

void hybrid_advantage(const ExperimentParams &p, Report &r) {
    int n = p.n.value_or(2);
    int m = p.m.value_or(4);
    long trials = p.trials.value_or(200);
    r.parameters = {{"n", n}, {"m", m}, {"trials", trials}, {"distinguisher", "collision search over q distinct queries"}};
    std::mt19937_64 rng(p.seed);
    std::uint64_t domain = std::uint64_t{1} << m;
    r.pass = true;
    for (std::uint64_t q = 2; q <= domain; q *= 2) {
        long hits_gh = 0;
        long hits_f = 0;
        for (long t = 0; t < trials; t++) {
            DerivedFunctions fgh =
                derive_fgh(m, n, random_bits(m, rng), random_bits(m, rng), random_bits(m, rng));
            std::vector<std::uint64_t> xs(domain);
            for (std::uint64_t i = 0; i < domain; i++) {
                xs[i] = i;
            }
            for (std::uint64_t i = 0; i < q; i++) {
                std::uint64_t j = i + rng() % (domain - i);
                std::swap(xs[i], xs[j]);
            }
            std::set<std::uint64_t> seen_gh;
            std::set<std::uint64_t> seen_f;
            bool coll_gh = false;
            bool coll_f = false;
            for (std::uint64_t i = 0; i < q; i++) {
                coll_gh |= !seen_gh.insert(fgh.g(fgh.h(xs[i]))).second;
                coll_f |= !seen_f.insert(fgh.f(xs[i])).second;
            }
            hits_gh += coll_gh ? 1 : 0;
            hits_f += coll_f ? 1 : 0;
        }
        double adv = static_cast<double>(hits_gh - hits_f) / static_cast<double>(trials);
        // A bijection never collides, so any hit on f is a bug.
        bool ok = hits_f == 0;
        r.pass = r.pass && ok;
        r.points.push_back({{"queries", q},
                            {"collision_rate_gh", static_cast<double>(hits_gh) / static_cast<double>(trials)},
                            {"collision_rate_f", static_cast<double>(hits_f) / static_cast<double>(trials)},
                            {"advantage", adv},
                            {"pass", ok}});
    }
}

void monotonicity_sweep(const ExperimentParams &p, Report &r) {
    long count = p.trials.value_or(200);
    r.parameters = {{"protocols", count}, {"n_a", 2}, {"n_b", 2}, {"max_c", 2}};
    std::mt19937_64 rng(p.seed);
    long violations = 0;
    double worst_gap = -1e300;
    for (long i = 0; i < count; i++) {
        LoccProtocol proto = random_protocol(rng);
        PureState input = random_pure_state(proto.n_a, proto.n_b, rng);
        MonotonicityCheck c = locc_monotonicity_detail(proto, input);
        worst_gap = std::max(worst_gap, c.average_output_entropy - c.input_entropy);
        if (!c.holds) {
            violations++;
            r.points.push_back({{"index", i},
                                {"protocol", serialize_protocol(proto)},
                                {"input_entropy", c.input_entropy},
                                {"output_entropy", c.average_output_entropy}});
        }
    }
    r.pass = violations == 0;
    r.points.push_back({{"violations", violations}, {"max_entropy_increase", worst_gap}, {"pass", r.pass}});
}

using Runner = std::function<void(const ExperimentParams &, Report &)>;

const std::map<std::string, Runner> &runners() {
    static const std::map<std::string, Runner> table = {
        {"entropy-gap", entropy_gap},       {"psi-prep", psi_prep},
        {"phi-distill", phi_distill},       {"oracle-state", oracle_state},
        {"teleport-cost", teleport_cost},   {"commit-game", commit_game},
        {"net-properties", net_properties}, {"hybrid-advantage", hybrid_advantage},
        {"monotonicity-sweep", monotonicity_sweep},
    };
    return table;
}

}  // namespace

const std::vector<std::string> &experiment_ids() {
    static const std::vector<std::string> ids = {"entropy-gap",    "psi-prep",         "phi-distill",
                                                 "oracle-state",   "teleport-cost",    "commit-game",
                                                 "net-properties", "hybrid-advantage", "monotonicity-sweep"};
    return ids;
}

Report run_experiment(const std::string &id, const ExperimentParams &params) {
    auto it = runners().find(id);
    if (it == runners().end()) {
        throw std::invalid_argument("unknown experiment '" + id + "'");
    }
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.experiment = id;
    r.seed = params.seed;
    r.note = kFiniteNote;
    it->second(params, r);
    r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

LoccProtocol random_protocol(std::mt19937_64 &rng, const RandomProtocolShape &shape) {
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    int t_a = pick(0, shape.max_ancilla);
    int t_b = pick(0, shape.max_ancilla);
    int c = pick(0, shape.max_c);
    int rounds = pick(1, shape.max_rounds);
    LoccProtocol p = LoccProtocol::empty(shape.n_a, shape.n_b, t_a, t_b, c, shape.n_a + t_a, shape.n_b + t_b);
    p.rounds.resize(static_cast<size_t>(rounds), p.rounds[0]);
    auto fill = [&](LocalCircuit &circ) {
        int gates = pick(0, shape.max_gates);
        for (int g = 0; g < gates; g++) {
            int kinds = c > 0 ? 9 : 7;
            int k = pick(0, kinds - 1);
            int w = circ.width;
            auto distinct = [&](int count) {
                std::vector<int> qs;
                while (static_cast<int>(qs.size()) < count) {
                    int q = pick(0, w - 1);
                    if (std::find(qs.begin(), qs.end(), q) == qs.end()) {
                        qs.push_back(q);
                    }
                }
                return qs;
            };
            switch (k) {
                case 0:
                    circ.add(Gate::h(pick(0, w - 1)));
                    break;
                case 1:
                    circ.add(Gate::x(pick(0, w - 1)));
                    break;
                case 2:
                    circ.add(Gate::z(pick(0, w - 1)));
                    break;
                case 3:
                    circ.add(Gate::s(pick(0, w - 1)));
                    break;
                case 4:
                    circ.add(Gate::t(pick(0, w - 1)));
                    break;
                case 5:
                    if (w >= 2) {
                        auto qs = distinct(2);
                        circ.add(Gate::cnot(qs[0], qs[1]));
                    }
                    break;
                case 6:
                    if (w >= 3) {
                        auto qs = distinct(3);
                        circ.add(Gate::toffoli(qs[0], qs[1], qs[2]));
                    }
                    break;
                default: {
                    int cbit = pick(0, c - 1);
                    int target = pick(0, w - 2);
                    if (target >= w - c + cbit) {
                        target++;
                    }
                    circ.add(k == 7 ? Gate::ccx(cbit, target) : Gate::ccz(cbit, target));
                    break;
                }
            }
        }
    };
    for (auto &r : p.rounds) {
        fill(r.a);
        fill(r.b);
    }
    return p;
}

}  // namespace entlab
