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

#include "qunip/bench.hpp"
#include "qunip/errors.hpp"

#include <doctest.h>

using namespace qunip;

namespace {

BenchSpec spec_of(std::vector<std::size_t> b, std::size_t n, bool compare) {
    BenchSpec s;
    s.b_values = std::move(b);
    s.n = n;
    s.compare = compare;
    s.seed = 3;
    return s;
}

} // namespace

TEST_CASE("bench rows: b=3, N=2 with comparison") {
    const auto rows = bench_sweep(spec_of({3}, 2, true));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].method == "imbedded");
    CHECK(rows[1].method == "bruteforce");
    CHECK(rows[1].paths == 8);
    CHECK(rows[0].multiply_adds == 4 * 2 + 2);
    CHECK(std::abs(rows[0].amplitude - rows[1].amplitude) <= 1e-10 * (1 + std::abs(rows[1].amplitude)));
}

TEST_CASE("bench sweep b=1..7, N=3") {
    const auto rows = bench_sweep(spec_of({1, 2, 3, 4, 5, 6, 7}, 3, true));
    REQUIRE(rows.size() == 14);
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        p *= 3;
        const BenchRow& dp = rows[i];
        const BenchRow& bf = rows[i + 1];
        CHECK(dp.b == bf.b);
        CHECK(dp.paths == p);
        CHECK(bf.paths == p);
        CHECK(dp.multiply_adds == 9 * (dp.b - 1) + 3);
        CHECK(std::abs(dp.amplitude - bf.amplitude) <= 1e-10 * (1 + std::abs(bf.amplitude)));
    }
}

TEST_CASE("bench without comparison has only imbedded rows") {
    const auto rows = bench_sweep(spec_of({10, 20}, 4, false));
    REQUIRE(rows.size() == 2);
    for (const BenchRow& r : rows) {
        CHECK(r.method == "imbedded");
    }
    CHECK(rows[1].multiply_adds == 16 * 19 + 4);
}

TEST_CASE("bench guard and validation") {
    CHECK_THROWS_AS(bench_sweep(spec_of({2, 9}, 8, true)), CapacityError);
    CHECK_NOTHROW(bench_sweep(spec_of({9}, 8, false)));
    CHECK_THROWS_AS(bench_sweep(spec_of({0}, 2, false)), DomainError);
    CHECK_THROWS_AS(bench_sweep(spec_of({1}, 0, false)), DomainError);
}

TEST_CASE("bench is deterministic given the seed") {
    BenchSpec s = spec_of({1, 5, 50}, 3, false);
    s.timing = false;
    const std::string a = format_bench_csv(bench_sweep(s));
    CHECK(a == format_bench_csv(bench_sweep(s)));
    s.seed = 4;
    CHECK(a != format_bench_csv(bench_sweep(s)));
}

TEST_CASE("b = 10^5, N = 8 imbedded row") {
    const auto rows = bench_sweep(spec_of({100000}, 8, false));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].multiply_adds == 6399944ULL);
    CHECK_FALSE(rows[0].paths.has_value());
}
