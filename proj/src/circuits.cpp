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

#include "qunip/circuits.hpp"

#include "qunip/config.hpp"
#include "qunip/errors.hpp"
#include "state_access.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qunip {

namespace {

std::vector<int> qubit_range(int first, int last) {
    std::vector<int> q(static_cast<std::size_t>(last - first + 1));
    std::iota(q.begin(), q.end(), first);
    return q;
}

std::string hadamard_label(int d) { return "hadamard layer on qubits 1.." + std::to_string(d); }

} // namespace

AuditedRun audit(RunTrace trace, double tol) {
    AuditedRun run{std::move(trace), {}};
    run.audits.reserve(run.trace.steps.size());
    for (const TraceStep& step : run.trace.steps) {
        run.audits.push_back(factor_product(step.state, tol));
    }
    return run;
}

PureState uniform_superposition(int d) {
    check_qubit_capacity(d, "uniform_superposition");
    const std::size_t dim = std::size_t{1} << d;
    const double amp = std::pow(2.0, -0.5 * d);
    return detail::StateAccess::adopt(d, std::vector<Amplitude>(dim, Amplitude{amp, 0.0}));
}

DatabaseState prepare_database(const PatternSet& p) {
    const int d = p.num_inputs();
    if (p.size() == 0) {
        throw DomainError("prepare_database: empty pattern set");
    }
    check_qubit_capacity(d + 2, "prepare_database");
    std::vector<Amplitude> amps(std::size_t{1} << (d + 2), Amplitude{0.0, 0.0});
    const double amp = 1.0 / std::sqrt(2.0 * static_cast<double>(p.size()));
    for (const auto& [x, b] : p.pairs()) {
        // |x>|0>|b> and -|x>|1>|b>
        amps[(x << 2) | b] = amp;
        amps[(x << 2) | 2U | b] = -amp;
    }
    return {PureState(d + 2, std::move(amps)), p.size()};
}

PureState bv_oracle(const PureState& s, BasisLabel a, int d) {
    const int n = s.num_qubits();
    if (d < 1 || d > n) {
        throw DomainError("bv_oracle: register width " + std::to_string(d) + " invalid for " +
                          std::to_string(n) + "-qubit state");
    }
    if (a >= (BasisLabel{1} << d)) {
        throw DomainError("bv_oracle: stimulus " + std::to_string(a) + " out of range for d = " +
                          std::to_string(d));
    }
    const unsigned shift = static_cast<unsigned>(n - d);
    return phase_flip(s, [a, shift](BasisLabel x) { return (std::popcount((x >> shift) & a) & 1) != 0; });
}

BvResult bernstein_vazirani(int d, BasisLabel a) {
    RunTrace trace;
    PureState s = uniform_superposition(d);
    trace.steps.push_back({"uniform superposition", s});
    s = bv_oracle(s, a, d);
    ++trace.oracle_calls;
    trace.steps.push_back({"oracle: CNOT cascade from qubits with a_i = 1 (a=" +
                               to_bitstring(a, d) + ")",
                           s});
    s = hadamard_layer(s, 1, d);
    trace.steps.push_back({hadamard_label(d), s});

    const std::vector<int> all = qubit_range(1, d);
    Distribution dist = measure_distribution(s, all);
    auto best = std::max_element(dist.begin(), dist.end(),
                                 [](const auto& l, const auto& r) { return l.second < r.second; });
    BvResult out{parse_bitstring(best->first), best->second, std::move(dist), {}};
    out.run = audit(std::move(trace));
    return out;
}

PureState lookup_target_state(int d, BasisLabel a, Bit b) {
    check_qubit_capacity(d + 2, "lookup_target_state");
    std::vector<Amplitude> amps(std::size_t{1} << (d + 2), Amplitude{0.0, 0.0});
    amps[(a << 2) | b] = std::numbers::sqrt2 / 2.0;
    amps[(a << 2) | 2U | b] = -std::numbers::sqrt2 / 2.0;
    return PureState(d + 2, std::move(amps));
}

LookupResult figure1_pipeline(const TruthTable& t, BasisLabel a) {
    return figure1_pipeline(full_pattern_set(t), a);
}

LookupResult figure1_pipeline(const PatternSet& p, BasisLabel a) {
    const int d = p.num_inputs();
    if (a >= (BasisLabel{1} << d)) {
        throw DomainError("figure1_pipeline: stimulus " + std::to_string(a) +
                          " out of range for d = " + std::to_string(d));
    }
    RunTrace trace;
    DatabaseState db = prepare_database(p);
    trace.prep_step_count = db.prep_step_count;
    PureState s = std::move(db.state);
    trace.steps.push_back({"database preparation (" + std::to_string(p.size()) + " patterns)", s});
    s = bv_oracle(s, a, d);
    ++trace.oracle_calls;
    trace.steps.push_back({"oracle: CNOT cascade from qubits with a_i = 1 (a=" +
                               to_bitstring(a, d) + ")",
                           s});
    s = hadamard_layer(s, 1, d);
    trace.steps.push_back({hadamard_label(d), s});

    const std::vector<int> reg = qubit_range(1, d);
    LookupResult out{s, measure_distribution(s, reg), std::nullopt, false, {}};
    try {
        const PureState rest = conditional_state(s, reg, to_bitstring(a, d));
        // Remaining qubits: ancilla then B.
        const int b_qubit = 2;
        out.conditional_b = measure_distribution(rest, std::span<const int>(&b_qubit, 1));
    } catch (const PostSelectionError&) {
        out.conditioning_failed = true;
    }
    out.run = audit(std::move(trace));
    return out;
}

DjResult deutsch_jozsa(const TruthTable& t) {
    const FunctionClass cls = classify(t);
    if (cls == FunctionClass::Neither) {
        throw PreconditionError("deutsch_jozsa: function with " + std::to_string(t.ones()) +
                                " ones of " + std::to_string(t.values().size()) +
                                " is neither constant nor balanced");
    }
    const int d = t.num_inputs();
    RunTrace trace;
    PureState s = uniform_superposition(d);
    trace.steps.push_back({"uniform superposition", s});
    s = phase_flip(s, [&t](BasisLabel x) { return t(x) != 0; });
    ++trace.oracle_calls;
    trace.steps.push_back({"phase oracle (-1)^B(x)", s});
    s = hadamard_layer(s, 1, d);
    trace.steps.push_back({hadamard_label(d), s});

    const double p0 = std::norm(s[0]);
    DjResult out{p0 >= 1.0 - 1e-9 ? FunctionClass::Constant : FunctionClass::Balanced, p0, {}};
    out.run = audit(std::move(trace));
    return out;
}

GroverResult grover(int d, BasisLabel marked, std::uint64_t iterations, bool audited) {
    const std::size_t dim = std::size_t{1} << std::clamp(d, 0, 63);
    if (d >= 1 && marked >= dim) {
        throw DomainError("grover: marked label " + std::to_string(marked) +
                          " out of range for d = " + std::to_string(d));
    }
    RunTrace trace;
    PureState s = uniform_superposition(d);
    trace.steps.push_back({"uniform superposition", s});
    for (std::uint64_t k = 1; k <= iterations; ++k) {
        s = phase_flip(s, [marked](BasisLabel x) { return x == marked; });
        ++trace.oracle_calls;
        trace.steps.push_back({"oracle " + std::to_string(k), s});

        std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
        Amplitude mean{0.0, 0.0};
        for (const Amplitude& z : amps) {
            mean += z;
        }
        mean /= static_cast<double>(dim);
        for (Amplitude& z : amps) {
            z = 2.0 * mean - z;
        }
        s = detail::StateAccess::adopt(d, std::move(amps));
        trace.steps.push_back({"inversion about the mean " + std::to_string(k), s});
    }
    GroverResult out{std::norm(s[marked]), {}};
    if (audited) {
        out.run = audit(std::move(trace));
    } else {
        out.run.trace = std::move(trace);
    }
    return out;
}

double grover_success_analytic(int d, std::uint64_t iterations) {
    const double theta = std::asin(std::pow(2.0, -0.5 * d));
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
    return s * s;
}

std::uint64_t optimal_grover_iterations(int d) {
    if (d < 1 || d > 120) {
        throw DomainError("optimal_grover_iterations: d = " + std::to_string(d));
    }
    return static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::pow(2.0, 0.5 * d)));
}

} // namespace qunip
