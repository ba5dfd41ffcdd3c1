// Copyright 2026 The qunip Authors
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

#include "qunip/boolean.hpp"

#include "qunip/config.hpp"
#include "qunip/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace qunip {

namespace {

void check_inputs(int d, const char* op) {
    if (d < 1 || d > kHardMaxQubits) {
        throw DomainError(std::string(op) + ": input count " + std::to_string(d) +
                          " outside [1, " + std::to_string(kHardMaxQubits) + "]");
    }
}

} // namespace

TruthTable::TruthTable(int d, std::vector<Bit> values) : d_(d), values_(std::move(values)) {
    check_inputs(d_, "TruthTable");
    if (values_.size() != (std::size_t{1} << d_)) {
        throw DomainError("TruthTable: " + std::to_string(values_.size()) +
                          " values for d = " + std::to_string(d_));
    }
    for (Bit b : values_) {
        if (b > 1) {
            throw DomainError("TruthTable: value " + std::to_string(b) + " is not a bit");
        }
    }
}

std::size_t TruthTable::ones() const {
    return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), Bit{1}));
}

PatternSet::PatternSet(int d, std::vector<Pair> pairs) : d_(d), pairs_(std::move(pairs)) {
    check_inputs(d_, "PatternSet");
    const std::uint64_t dim = std::uint64_t{1} << d_;
    if (pairs_.empty() || pairs_.size() > dim) {
        throw DomainError("PatternSet: " + std::to_string(pairs_.size()) +
                          " pairs outside [1, " + std::to_string(dim) + "]");
    }
    std::unordered_set<BasisLabel> seen;
    for (const auto& [x, b] : pairs_) {
        if (x >= dim) {
            throw DomainError("PatternSet: argument " + std::to_string(x) + " out of range");
        }
        if (b > 1) {
            throw DomainError("PatternSet: value " + std::to_string(b) + " is not a bit");
        }
        if (!seen.insert(x).second) {
            throw DomainError("PatternSet: argument " + to_bitstring(x, d_) + " repeated");
        }
    }
}

std::string_view to_string(FunctionClass c) {
    switch (c) {
    case FunctionClass::Constant:
        return "Constant";
    case FunctionClass::Balanced:
        return "Balanced";
    case FunctionClass::Neither:
        return "Neither";
    }
    return "?";
}

FunctionClass classify(const TruthTable& t) {
    const std::size_t ones = t.ones();
    const std::size_t n = t.values().size();
    if (ones == 0 || ones == n) {
        return FunctionClass::Constant;
    }
    if (2 * ones == n) {
        return FunctionClass::Balanced;
    }
    return FunctionClass::Neither;
}

Bit dot_parity(BasisLabel x, BasisLabel a, int d) {
    check_inputs(d, "dot_parity");
    const BasisLabel dim = BasisLabel{1} << d;
    if (x >= dim || a >= dim) {
        throw DomainError("dot_parity: labels (" + std::to_string(x) + ", " + std::to_string(a) +
                          ") out of range for d = " + std::to_string(d));
    }
    return static_cast<Bit>(std::popcount(x & a) & 1);
}

TruthTable linear_table(BasisLabel s, int d) {
    check_inputs(d, "linear_table");
    const std::size_t dim = std::size_t{1} << d;
    if (s >= dim) {
        throw DomainError("linear_table: mask " + std::to_string(s) + " out of range");
    }
    std::vector<Bit> values(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        values[x] = static_cast<Bit>(std::popcount(x & s) & 1);
    }
    return TruthTable(d, std::move(values));
}

TruthTable constant_table(int d, Bit value) {
    check_inputs(d, "constant_table");
    return TruthTable(d, std::vector<Bit>(std::size_t{1} << d, value));
}

PatternSet full_pattern_set(const TruthTable& t) {
    check_qubit_capacity(t.num_inputs(), "full_pattern_set");
    std::vector<PatternSet::Pair> pairs;
    pairs.reserve(t.values().size());
    for (std::size_t x = 0; x < t.values().size(); ++x) {
        pairs.emplace_back(x, t(x));
    }
    return PatternSet(t.num_inputs(), std::move(pairs));
}

} // namespace qunip
