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

#include "oracles.hpp"
#include "qunip/circuits.hpp"
#include "qunip/config.hpp"
#include "qunip/errors.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace qunip;

namespace {

constexpr double kH = 0.70710678118654752;

std::vector<int> range(int first, int last) {
    std::vector<int> q(static_cast<std::size_t>(last - first + 1));
    std::iota(q.begin(), q.end(), first);
    return q;
}

// Every truth table on d inputs, as bit vectors.
std::vector<TruthTable> all_tables(int d) {
    std::vector<TruthTable> out;
    const std::size_t n = std::size_t{1} << d;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::vector<Bit> v(n);
        for (std::size_t x = 0; x < n; ++x) {
            v[x] = static_cast<Bit>((code >> x) & 1U);
        }
        out.emplace_back(d, v);
    }
    return out;
}

} // namespace

TEST_CASE("uniform_superposition") {
    const PureState one = uniform_superposition(1);
    CHECK(std::abs(one[0] - 0.7071) < 1e-4);
    CHECK(std::abs(one[1] - 0.7071) < 1e-4);
    const PureState three = uniform_superposition(3);
    for (Amplitude a : three.amplitudes()) {
        CHECK(std::abs(a - 0.35355339) < 1e-8);
    }
    for (int d = 1; d <= 6; ++d) {
        for (const auto& [k, p] : measure_distribution(uniform_superposition(d), range(1, d))) {
            CHECK(p == doctest::Approx(std::pow(2.0, -d)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(uniform_superposition(max_qubits() + 1), CapacityError);
}

TEST_CASE("prepare_database examples") {
    const DatabaseState one = prepare_database(PatternSet(1, {{0, 1}}));
    CHECK(one.prep_step_count == 1);
    for (BasisLabel x = 0; x < 8; ++x) {
        const double want = x == 0b001 ? kH : (x == 0b011 ? -kH : 0.0);
        CHECK(std::abs(one.state[x] - want) < 1e-15);
    }

    const DatabaseState zero = prepare_database(full_pattern_set(constant_table(1, 0)));
    CHECK(zero.prep_step_count == 2);
    const double want[8] = {0.5, 0.0, -0.5, 0.0, 0.5, 0.0, -0.5, 0.0};
    for (BasisLabel x = 0; x < 8; ++x) {
        CHECK(std::abs(zero.state[x] - want[x]) < 1e-15);
    }

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 6);
        std::vector<PatternSet::Pair> pairs;
        for (BasisLabel x = 0; x < (BasisLabel{1} << d); ++x) {
            if (rng() % 2 || pairs.empty()) {
                pairs.emplace_back(x, static_cast<Bit>(rng() & 1U));
            }
        }
        const DatabaseState db = prepare_database(PatternSet(d, pairs));
        CHECK(std::abs(norm_squared(db.state.amplitudes()) - 1.0) < 1e-12);
        CHECK(db.prep_step_count == pairs.size());
    }

    set_max_qubits(4);
    CHECK_THROWS_AS(prepare_database(full_pattern_set(constant_table(3, 0))), CapacityError);
    set_max_qubits(kDefaultMaxQubits);
}

TEST_CASE("bv_oracle") {
    std::mt19937_64 rng(2);
    const PureState s(3, oracle::random_vector(8, rng));
    CHECK(fidelity(bv_oracle(s, 0, 3), s) == doctest::Approx(1.0).epsilon(1e-15));
    const PureState flipped = bv_oracle(uniform_superposition(2), 0b11, 2);
    const double want[4] = {0.5, -0.5, -0.5, 0.5};
    for (BasisLabel x = 0; x < 4; ++x) {
        CHECK(std::abs(flipped[x] - want[x]) < 1e-15);
    }
    const PureState twice = bv_oracle(bv_oracle(s, 0b101, 3), 0b101, 3);
    for (BasisLabel x = 0; x < 8; ++x) {
        CHECK(twice[x] == s[x]);
    }
    // Acting on the top d qubits of a wider register.
    const PureState wide = bv_oracle(uniform_superposition(4), 0b1, 1);
    for (BasisLabel x = 0; x < 16; ++x) {
        CHECK(wide[x].real() == doctest::Approx((x >> 3) ? -0.25 : 0.25));
    }
    CHECK_THROWS_AS(bv_oracle(s, 8, 3), DomainError);
}

TEST_CASE("bernstein_vazirani examples") {
    const BvResult r = bernstein_vazirani(3, 0b101);
    CHECK(r.recovered == 0b101);
    CHECK(r.run.trace.oracle_calls == 1);
    CHECK(r.run.trace.steps.size() == 3);
    CHECK(r.run.audits.size() == 3);
    CHECK(bernstein_vazirani(3, 0).recovered == 0);
    CHECK(bernstein_vazirani(1, 1).recovered == 1);
}

TEST_CASE("bernstein_vazirani matches the direct-sum oracle") {
    std::mt19937_64 rng(3);
    for (int d = 1; d <= 6; ++d) {
        const BasisLabel a = rng() % (BasisLabel{1} << d);
        const PureState fin = bernstein_vazirani(d, a).run.trace.steps.back().state;
        for (BasisLabel y = 0; y < (BasisLabel{1} << d); ++y) {
            CHECK(std::abs(fin[y] - oracle::bv_final_amplitude(d, a, y)) < 1e-12);
        }
    }
}

TEST_CASE("property: BV single-query determinism") {
    std::mt19937_64 rng(4);
    for (int d = 1; d <= 10; ++d) {
        for (int trial = 0; trial < 50; ++trial) {
            const BasisLabel a = rng() % (BasisLabel{1} << d);
            const BvResult r = bernstein_vazirani(d, a);
            CHECK(r.recovered == a);
            CHECK(r.run.trace.oracle_calls == 1);
            REQUIRE(r.distribution.size() == 1);
            CHECK(std::abs(r.distribution.at(to_bitstring(a, d)) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("figure1_pipeline examples") {
    SUBCASE("d=1, B=0, a=1 reproduces the claimed final state") {
        const LookupResult r = figure1_pipeline(constant_table(1, 0), 1);
        const double want[8] = {0, 0, 0, 0, kH, 0, -kH, 0};
        for (BasisLabel x = 0; x < 8; ++x) {
            CHECK(std::abs(r.final_state[x] - want[x]) < 1e-12);
        }
        CHECK(fidelity(r.final_state, lookup_target_state(1, 1, 0)) >= 1.0 - 1e-12);
        CHECK(r.run.trace.prep_step_count == 2);
        CHECK(r.run.trace.oracle_calls == 1);
    }
    SUBCASE("d=2, B=1, any a") {
        for (BasisLabel a = 0; a < 4; ++a) {
            const LookupResult r = figure1_pipeline(constant_table(2, 1), a);
            REQUIRE(r.first_register.size() == 1);
            CHECK(r.first_register.at(to_bitstring(a, 2)) == doctest::Approx(1.0).epsilon(1e-12));
            REQUIRE(r.conditional_b.has_value());
            REQUIRE(r.conditional_b->size() == 1);
            CHECK(r.conditional_b->at("1") == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("d=1, B(x)=x, a=0 splits the first register") {
        const LookupResult r = figure1_pipeline(linear_table(1, 1), 0);
        CHECK(r.first_register.at("0") == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.first_register.at("1") == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("figure1_pipeline matches the closed-form amplitude oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 5);
        std::vector<Bit> v(std::size_t{1} << d);
        for (auto& b : v) {
            b = static_cast<Bit>(rng() & 1U);
        }
        const TruthTable t(d, v);
        const BasisLabel a = rng() % (BasisLabel{1} << d);
        const LookupResult r = figure1_pipeline(t, a);
        const auto b_of = [&t](std::uint64_t x) { return static_cast<int>(t(x)); };
        for (BasisLabel y = 0; y < (BasisLabel{1} << d); ++y) {
            for (int anc = 0; anc < 2; ++anc) {
                for (int b = 0; b < 2; ++b) {
                    const BasisLabel label = (y << 2) | (static_cast<BasisLabel>(anc) << 1) |
                                             static_cast<BasisLabel>(b);
                    CHECK(std::abs(r.final_state[label] -
                                   oracle::lookup_amplitude(d, b_of, a, y, anc, b)) < 1e-12);
                }
            }
        }
        CHECK(r.run.trace.prep_step_count == (std::uint64_t{1} << d));
        CHECK(r.run.trace.oracle_calls == 1);
    }
}

TEST_CASE("figure1_pipeline conditional B follows the pattern counts") {
    // B = x1 xor x2, a = 00: mass on 00 and 11; conditional B weights N_b^2.
    const LookupResult r = figure1_pipeline(linear_table(0b11, 2), 0b00);
    CHECK(r.first_register.at("00") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.first_register.at("11") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(r.conditioning_failed);
    REQUIRE(r.conditional_b.has_value());
    CHECK(r.conditional_b->at("0") == doctest::Approx(0.5).epsilon(1e-12));

    // Three ones out of four: weights 1 : 9, for every stimulus.
    const TruthTable t(2, {0, 1, 1, 1});
    for (BasisLabel a = 0; a < 4; ++a) {
        const LookupResult q = figure1_pipeline(t, a);
        REQUIRE(q.conditional_b.has_value());
        CHECK(q.conditional_b->at("0") == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(q.conditional_b->at("1") == doctest::Approx(0.9).epsilon(1e-12));
    }
}

TEST_CASE("figure1_pipeline on a restricted pattern set") {
    const PatternSet p(2, {{0b01, 1}, {0b10, 0}});
    const LookupResult r = figure1_pipeline(p, 0b01);
    CHECK(r.run.trace.prep_step_count == 2);
    double total = 0.0;
    for (const auto& kv : r.first_register) {
        total += kv.second;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(figure1_pipeline(p, 4), DomainError);
}

TEST_CASE("property: constant B lookup is exact") {
    for (int d = 1; d <= 6; ++d) {
        for (Bit b = 0; b < 2; ++b) {
            for (BasisLabel a = 0; a < (BasisLabel{1} << d); a += 1 + d) {
                const LookupResult r = figure1_pipeline(constant_table(d, b), a);
                CHECK(fidelity(r.final_state, lookup_target_state(d, a, b)) >= 1.0 - 1e-12);
            }
        }
    }
}

TEST_CASE("property: database states entangle arguments with the value qubit") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 6);
        std::vector<Bit> v(std::size_t{1} << d);
        do {
            for (auto& b : v) {
                b = static_cast<Bit>(rng() & 1U);
            }
        } while (classify(TruthTable(d, v)) == FunctionClass::Constant);
        const PureState db = prepare_database(full_pattern_set(TruthTable(d, v))).state;
        // The ancilla is a factor; condition it away to get qubits {1..d, d+2}.
        const std::vector<int> anc{d + 1};
        const PureState reduced = conditional_state(db, anc, "0");
        CHECK(schmidt_rank(reduced, CutSpec{range(1, d)}) >= 2);
        CHECK(oracle::schmidt_rank_qr({reduced.amplitudes().begin(), reduced.amplitudes().end()},
                                        d + 1, range(1, d), 1e-8) >= 2);
    }
}

TEST_CASE("deutsch_jozsa examples") {
    const DjResult c = deutsch_jozsa(constant_table(2, 0));
    CHECK(c.verdict == FunctionClass::Constant);
    REQUIRE(c.run.audits.size() == 3);
    for (const FactorizationReport& a : c.run.audits) {
        CHECK(a.is_product);
        CHECK(a.residual < 1e-10);
    }

    const DjResult x = deutsch_jozsa(linear_table(0b11, 2));
    CHECK(x.verdict == FunctionClass::Balanced);
    const PureState& post = x.run.trace.steps[1].state;
    const double want[4] = {0.5, -0.5, -0.5, 0.5};
    for (BasisLabel i = 0; i < 4; ++i) {
        CHECK(std::abs(post[i] - want[i]) < 1e-15);
    }
    CHECK(x.run.audits[1].is_product);

    CHECK(deutsch_jozsa(TruthTable(1, {0, 1})).verdict == FunctionClass::Balanced);
    CHECK_THROWS_AS(deutsch_jozsa(TruthTable(2, {0, 0, 0, 1})), PreconditionError);
}

TEST_CASE("property: DJ at d <= 2 never entangles the register") {
    for (int d = 1; d <= 2; ++d) {
        for (const TruthTable& t : all_tables(d)) {
            const FunctionClass cls = classify(t);
            if (cls == FunctionClass::Neither) {
                continue;
            }
            const DjResult r = deutsch_jozsa(t);
            CHECK(r.verdict == cls);
            for (const FactorizationReport& a : r.run.audits) {
                CHECK(a.is_product);
                CHECK(a.residual < 1e-10);
            }
        }
    }
}

TEST_CASE("DJ verdicts beyond d = 2") {
    std::mt19937_64 rng(7);
    for (int d = 3; d <= 8; ++d) {
        std::vector<Bit> v(std::size_t{1} << d, 0);
        std::fill(v.begin(), v.begin() + static_cast<long>(v.size() / 2), 1);
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(deutsch_jozsa(TruthTable(d, v)).verdict == FunctionClass::Balanced);
        CHECK(deutsch_jozsa(constant_table(d, 1)).verdict == FunctionClass::Constant);
    }
}

TEST_CASE("grover examples") {
    CHECK(std::abs(grover(2, 3, 1).success_probability - 1.0) < 1e-12);
    for (int d = 1; d <= 6; ++d) {
        CHECK(grover(d, 0, 0).success_probability ==
              doctest::Approx(std::pow(2.0, -d)).epsilon(1e-12));
    }
    // sin^2(5 asin(8^{-1/2})) evaluated independently: 0.9453125
    CHECK(std::abs(grover(3, 5, 2).success_probability - 0.94531) < 1e-4);
    CHECK(std::abs(oracle::grover_analytic(3, 2) - 0.9453125) < 1e-12);
    CHECK_THROWS_AS(grover(3, 8, 1), DomainError);
}

TEST_CASE("grover trace and oracle accounting") {
    const GroverResult r = grover(4, 9, 3);
    CHECK(r.run.trace.oracle_calls == 3);
    CHECK(r.run.trace.steps.size() == 7);
    CHECK(r.run.audits.size() == 7);
    const GroverResult u = grover(4, 9, 3, false);
    CHECK(u.run.audits.empty());
    CHECK(u.success_probability == r.success_probability);
}

TEST_CASE("grover d=2 post-oracle state is entangled") {
    // Reported, not a verdict on any claim: the textbook circuit at d = 2.
    const GroverResult r = grover(2, 3, 1);
    const PureState& post = r.run.trace.steps[1].state;
    CHECK(two_qubit_tangle(post) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(r.run.audits[1].is_product);
}

TEST_CASE("property: grover matches the analytic curve") {
    for (int d = 1; d <= 8; ++d) {
        const BasisLabel marked = (BasisLabel{1} << d) - 1;
        for (std::uint64_t k = 0; k <= 40; k += 3) {
            CHECK(std::abs(grover(d, marked, k, false).success_probability -
                           oracle::grover_analytic(d, k)) < 1e-9);
            CHECK(std::abs(grover_success_analytic(d, k) - oracle::grover_analytic(d, k)) < 1e-15);
        }
    }
}

TEST_CASE("optimal_grover_iterations") {
    CHECK(optimal_grover_iterations(2) == 1);
    CHECK(optimal_grover_iterations(4) == 3);
    CHECK(optimal_grover_iterations(10) == 25);
    CHECK(optimal_grover_iterations(1) == 1);
    CHECK_THROWS_AS(optimal_grover_iterations(0), DomainError);
}

TEST_CASE("audit aligns reports with steps") {
    RunTrace t;
    t.steps.push_back({"bell", PureState(2, {kH, 0, 0, kH})});
    t.steps.push_back({"basis", basis_state(2, 1)});
    const AuditedRun run = audit(t);
    REQUIRE(run.audits.size() == 2);
    CHECK_FALSE(run.audits[0].is_product);
    CHECK(run.audits[1].is_product);
}
