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

#include "entlab/random_oracle.h"

#include <set>

#include "entlab/errors.h"
#include "entlab/prg.h"
#include "json.hpp"

namespace entlab {

RandomOracle::RandomOracle(int in_bits, int out_bits, Bits seed)
    : in_bits_(in_bits), out_bits_(out_bits), seed_(std::move(seed)) {
    if (in_bits_ < 1 || in_bits_ > 32 || out_bits_ < 1 || out_bits_ > 64) {
        throw DimensionError("random oracle needs 1..32 input bits and 1..64 output bits");
    }
}

std::uint64_t RandomOracle::sample(std::uint64_t x) const {
    return bits_to_uint(prg_bits(concat(seed_, bits_from_uint(x, in_bits_)), static_cast<std::size_t>(out_bits_)));
}

void RandomOracle::record(std::uint64_t x, std::uint64_t y) {
    forward_.emplace(x, y);
    reverse_.emplace(y, x);
}

std::uint64_t RandomOracle::query(std::uint64_t x) {
    if ((x >> in_bits_) != 0) {
        throw DimensionError("oracle input outside " + std::to_string(in_bits_) + " bits");
    }
    auto it = forward_.find(x);
    if (it != forward_.end()) {
        return it->second;
    }
    std::uint64_t y = sample(x);
    record(x, y);
    return y;
}

Bits RandomOracle::query(const Bits &x) {
    if (static_cast<int>(x.size()) != in_bits_) {
        throw DimensionError("oracle input must have " + std::to_string(in_bits_) + " bits");
    }
    return bits_from_uint(query(bits_to_uint(x)), out_bits_);
}

std::optional<std::uint64_t> RandomOracle::inverse_query(std::uint64_t y) const {
    if (out_bits_ < 64 && (y >> out_bits_) != 0) {
        throw DimensionError("oracle output outside " + std::to_string(out_bits_) + " bits");
    }
    auto it = reverse_.find(y);
    if (it == reverse_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<Bits> RandomOracle::inverse_query(const Bits &y) const {
    if (static_cast<int>(y.size()) != out_bits_) {
        throw DimensionError("oracle output must have " + std::to_string(out_bits_) + " bits");
    }
    auto x = inverse_query(bits_to_uint(y));
    if (!x) {
        return std::nullopt;
    }
    return bits_from_uint(*x, in_bits_);
}

std::optional<std::uint64_t> RandomOracle::lookup(std::uint64_t x) const {
    auto it = forward_.find(x);
    if (it == forward_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void RandomOracle::populate_all() {
    if (in_bits_ > 24) {
        throw ResourceError("refusing to populate an oracle with more than 2^24 inputs");
    }
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << in_bits_); x++) {
        query(x);
    }
}

bool RandomOracle::fully_populated() const {
    return forward_.size() == (std::size_t{1} << in_bits_);
}

bool RandomOracle::injective_under(std::uint64_t (*project)(std::uint64_t, int), int half) {
    populate_all();
    std::set<std::uint64_t> seen;
    for (const auto &[x, y] : forward_) {
        if (!seen.insert(project(y, half)).second) {
            return false;
        }
    }
    return true;
}

bool RandomOracle::injective() {
    return injective_under([](std::uint64_t y, int) { return y; }, 0);
}

bool RandomOracle::left_injective() {
    return injective_under([](std::uint64_t y, int h) { return y >> h; }, out_bits_ / 2);
}

bool RandomOracle::right_injective() {
    return injective_under([](std::uint64_t y, int h) { return y & ((std::uint64_t{1} << h) - 1); }, out_bits_ / 2);
}

std::string RandomOracle::dump_json() const {
    nlohmann::json j;
    j["in_bits"] = in_bits_;
    j["out_bits"] = out_bits_;
    j["seed"] = bits_to_string(seed_);
    nlohmann::json table = nlohmann::json::object();
    for (const auto &[x, y] : forward_) {
        table[bits_to_string(bits_from_uint(x, in_bits_))] = bits_to_string(bits_from_uint(y, out_bits_));
    }
    j["table"] = table;
    return j.dump(2);
}

RandomOracle RandomOracle::load_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    RandomOracle o(j.at("in_bits").get<int>(), j.at("out_bits").get<int>(),
                   bits_from_string(j.at("seed").get<std::string>()));
    for (const auto &[k, v] : j.at("table").items()) {
        Bits x = bits_from_string(k);
        Bits y = bits_from_string(v.get<std::string>());
        if (static_cast<int>(x.size()) != o.in_bits_ || static_cast<int>(y.size()) != o.out_bits_) {
            throw DimensionError("oracle table entry has the wrong width");
        }
        o.record(bits_to_uint(x), bits_to_uint(y));
    }
    return o;
}

}  // namespace entlab
