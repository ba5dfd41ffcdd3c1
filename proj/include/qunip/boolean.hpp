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

#pragma once

#include "qunip/statevec.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace qunip {

using Bit = std::uint8_t;

/// Full truth table of B : {0,1}^d -> {0,1}, values[x] = B(x).
class TruthTable {
  public:
    TruthTable(int d, std::vector<Bit> values);

    [[nodiscard]] int num_inputs() const noexcept { return d_; }
    [[nodiscard]] std::span<const Bit> values() const noexcept { return values_; }
    [[nodiscard]] Bit operator()(BasisLabel x) const { return values_[x]; }
    [[nodiscard]] std::size_t ones() const;

  private:
    int d_;
    std::vector<Bit> values_;
};

/// Restricted example set: distinct arguments paired with function values.
class PatternSet {
  public:
    using Pair = std::pair<BasisLabel, Bit>;

    PatternSet(int d, std::vector<Pair> pairs);

    [[nodiscard]] int num_inputs() const noexcept { return d_; }
    [[nodiscard]] std::span<const Pair> pairs() const noexcept { return pairs_; }
    [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }

  private:
    int d_;
    std::vector<Pair> pairs_;
};

enum class FunctionClass { Constant, Balanced, Neither };

std::string_view to_string(FunctionClass c);

FunctionClass classify(const TruthTable& t);

/// (sum_i x_i a_i) mod 2
Bit dot_parity(BasisLabel x, BasisLabel a, int d);

/// values[x] = dot_parity(x, s, d)
TruthTable linear_table(BasisLabel s, int d);

TruthTable constant_table(int d, Bit value);

/// Every (x, B(x)); 2^d pairs.
PatternSet full_pattern_set(const TruthTable& t);

} // namespace qunip
