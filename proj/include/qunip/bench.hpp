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

#include "qunip/interference.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qunip {

struct BenchSpec {
    std::vector<std::size_t> b_values;
    std::size_t n = 2;
    std::uint64_t seed = 0;
    /// Also run brute-force enumeration (every N^b must be within kPathGuard).
    bool compare = false;
    unsigned threads = 1;
    /// When false the nanoseconds column is written as 0, making output
    /// byte-reproducible.
    bool timing = true;
};

struct BenchRow {
    std::size_t b = 0;
    std::size_t n = 0;
    std::string method; // "imbedded" or "bruteforce"
    std::uint64_t multiply_adds = 0;
    /// N^b; empty when it does not fit in 64 bits.
    std::optional<std::uint64_t> paths;
    std::int64_t nanoseconds = 0;
    Amplitude amplitude;
};

/// The lattice used for barrier count b: uniform N, unitary stages, seed
/// derived from (spec.seed, b).
SlitLattice bench_lattice(const BenchSpec& spec, std::size_t b);

/// One imbedded row per b, plus a brute-force row per b when compare is set.
std::vector<BenchRow> bench_sweep(const BenchSpec& spec);

inline constexpr std::string_view kBenchCsvHeader =
    "b,N,method,multiply_adds,paths,nanoseconds,amp_re,amp_im";

std::string format_bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(std::string_view text);

} // namespace qunip
