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

#include "entlab/measures.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "entlab/errors.h"

namespace entlab {

namespace {

constexpr double kLogSlack = 1e-10;
constexpr double kMajorizationSlack = 1e-10;
constexpr double kMonotonicityTol = 1e-8;

ErrorReport error_against(const LoccProtocol &p, const ProtocolInput &input, const PureState &target, EvalMode mode,
                          SampleOptions opts) {
    ErrorReport r;
    r.mode = mode;
    if (mode == EvalMode::Exact) {
        double f = 0.0;
        for (const Branch &b : execute_branches(p, input)) {
            f += b.probability * fidelity_with_pure(b.state, target);
        }
        r.value = std::clamp(1.0 - f, 0.0, 1.0);
        return r;
    }
    if (opts.trials <= 0) {
        throw std::invalid_argument("sampled mode needs a positive trial count");
    }
    std::mt19937_64 seeds(opts.seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long t = 0; t < opts.trials; t++) {
        double e = 1.0 - fidelity_with_pure(execute_sampled(p, input, seeds()).output, target);
        sum += e;
        sum_sq += e * e;
    }
    double n = static_cast<double>(opts.trials);
    double mean = sum / n;
    double var = std::max(0.0, sum_sq / n - mean * mean);
    r.value = std::clamp(mean, 0.0, 1.0);
    r.trials = opts.trials;
    r.std_error = std::sqrt(var / n);
    return r;
}

}  // namespace

const char *eval_mode_name(EvalMode mode) {
    return mode == EvalMode::Exact ? "exact" : "sampled";
}

ErrorReport distillation_error(const LoccProtocol &p, const ProtocolInput &rho, int m, EvalMode mode,
                               SampleOptions opts) {
    if (p.m_a != m || p.m_b != m) {
        throw DimensionError("distillation_error: protocol outputs " + std::to_string(p.m_a) + "+" +
                             std::to_string(p.m_b) + " qubits, expected " + std::to_string(m) + "+" +
                             std::to_string(m));
    }
    return error_against(p, rho, epr_pairs(m), mode, opts);
}

ErrorReport dilution_error(const LoccProtocol &p, const AnyState &target, int n, EvalMode mode, SampleOptions opts) {
    const auto *pure = std::get_if<PureState>(&target);
    if (pure == nullptr) {
        throw std::invalid_argument("dilution_error: mixed targets are not supported");
    }
    if (p.n_a != n || p.n_b != n) {
        throw DimensionError("dilution_error: protocol takes " + std::to_string(p.n_a) + "+" + std::to_string(p.n_b) +
                             " input qubits, expected " + std::to_string(n) + " EPR pairs");
    }
    if (pure->n_a() != p.m_a || pure->n_b() != p.m_b) {
        throw DimensionError("dilution_error: target partition does not match protocol outputs");
    }
    return error_against(p, ProtocolInput(epr_pairs(n)), *pure, mode, opts);
}

std::vector<double> schmidt_coefficients(const PureState &state) {
    RealVector c = schmidt_decompose(state).coefficients;
    return std::vector<double>(c.data(), c.data() + c.size());
}

double entanglement_entropy(const PureState &state) {
    return shannon_entropy(schmidt_decompose(state).coefficients);
}

double entanglement_entropy(const AnyState &state) {
    if (const auto *ps = std::get_if<PureState>(&state)) {
        return entanglement_entropy(*ps);
    }
    const auto &rho = std::get<DensityMatrix>(state);
    return std::max(von_neumann_entropy(partial_trace(rho, Side::A)), von_neumann_entropy(partial_trace(rho, Side::B)));
}

double conditional_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, Side::B));
}

bool nielsen_convertible(const std::vector<double> &src, const std::vector<double> &dst) {
    auto check = [](const std::vector<double> &v, const char *name) {
        double s = 0.0;
        for (size_t i = 0; i < v.size(); i++) {
            if (v[i] < -kInvariantTol || (i > 0 && v[i] > v[i - 1] + kInvariantTol)) {
                throw std::invalid_argument(std::string(name) + " must be non-negative and sorted descending");
            }
            s += v[i];
        }
        if (std::abs(s - 1.0) > kInvariantTol) {
            throw std::invalid_argument(std::string(name) + " sums to " + std::to_string(s) + ", expected 1");
        }
    };
    check(src, "source coefficients");
    check(dst, "target coefficients");
    size_t n = std::max(src.size(), dst.size());
    double ps = 0.0;
    double pd = 0.0;
    for (size_t k = 0; k < n; k++) {
        ps += k < src.size() ? src[k] : 0.0;
        pd += k < dst.size() ? dst[k] : 0.0;
        if (ps > pd + kMajorizationSlack) {
            return false;
        }
    }
    return true;
}

int exact_pure_distillable(const PureState &state) {
    double lmax = schmidt_decompose(state).coefficients(0);
    return static_cast<int>(std::floor(-std::log2(lmax) + kLogSlack));
}

int exact_pure_cost(const PureState &state) {
    int rank = schmidt_decompose(state).rank(1e-10);
    if (rank <= 1) {
        return 0;
    }
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(rank)) - kLogSlack));
}

MonotonicityCheck locc_monotonicity_detail(const LoccProtocol &p, const PureState &input) {
    MonotonicityCheck r;
    r.input_entropy = entanglement_entropy(input);
    auto branches = execute_branches(p, ProtocolInput(input));
    for (const Branch &b : branches) {
        const auto *ps = std::get_if<PureState>(&b.state);
        if (ps == nullptr) {
            throw std::invalid_argument("monotonicity check needs pure branches; the protocol discards entangled qubits");
        }
        r.average_output_entropy += b.probability * entanglement_entropy(*ps);
    }
    r.branches = branches.size();
    r.holds = r.average_output_entropy <= r.input_entropy + kMonotonicityTol;
    return r;
}

bool locc_monotonicity_check(const LoccProtocol &p, const PureState &input) {
    return locc_monotonicity_detail(p, input).holds;
}

}  // namespace entlab
