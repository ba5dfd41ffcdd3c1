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

/**
 * @file
 * Algorithm suite: database-state preparation, the composite
 * database + Bernstein-Vazirani lookup circuit, standard Bernstein-Vazirani,
 * Deutsch-Jozsa and Grover. Every run records the state after each logical
 * stage and can be audited for product structure.
 *
 * Register layout of the lookup circuit on d+2 qubits:
 *   qubits 1..d  argument register x
 *   qubit  d+1   ancilla in (|0> - |1>)/sqrt(2)
 *   qubit  d+2   function value B(x)
 */
#pragma once

#include "qunip/boolean.hpp"
#include "qunip/entanglement.hpp"
#include "qunip/statevec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qunip {

struct TraceStep {
    std::string label;
    PureState state;
};

struct RunTrace {
    std::vector<TraceStep> steps;
    /// Pattern-insertion steps charged to database preparation.
    std::uint64_t prep_step_count = 0;
    std::uint64_t oracle_calls = 0;
};

struct AuditedRun {
    RunTrace trace;
    /// One report per trace step, same order.
    std::vector<FactorizationReport> audits;
};

AuditedRun audit(RunTrace trace, double tol = kDefaultRankTolerance);

/// All amplitudes 2^{-d/2}.
PureState uniform_superposition(int d);

struct DatabaseState {
    PureState state;
    std::uint64_t prep_step_count;
};

/// (1/sqrt(2|p|)) sum_{(x,b) in p} |x> (|0> - |1>) |b> on d+2 qubits. One
/// preparation step is charged per pattern. Amplitudes are written directly;
/// the gate-level loading procedure is not modelled.
DatabaseState prepare_database(const PatternSet& p);

/// Negates every amplitude whose first-d-qubit part x has x.a odd. Same
/// action as a CNOT cascade from the qubits with a_i = 1 onto a
/// (|0> - |1>)/sqrt(2) ancilla.
PureState bv_oracle(const PureState& s, BasisLabel a, int d);

struct BvResult {
    BasisLabel recovered;
    double recovered_probability;
    Distribution distribution;
    AuditedRun run;
};

BvResult bernstein_vazirani(int d, BasisLabel a);

struct LookupResult {
    PureState final_state;
    /// Marginal over qubits 1..d.
    Distribution first_register;
    /// Distribution of qubit d+2 given the first register reads a; empty
    /// when that outcome has zero probability.
    std::optional<Distribution> conditional_b;
    bool conditioning_failed = false;
    AuditedRun run;
};

/// Database preparation from every row of `t`, one oracle query with
/// stimulus a, then Hadamards on qubits 1..d.
LookupResult figure1_pipeline(const TruthTable& t, BasisLabel a);

/// Same circuit over a restricted pattern set.
LookupResult figure1_pipeline(const PatternSet& p, BasisLabel a);

/// |a> (|0> - |1>)/sqrt(2) |b>
PureState lookup_target_state(int d, BasisLabel a, Bit b);

struct DjResult {
    FunctionClass verdict;
    double zero_probability;
    AuditedRun run;
};

/// Phase-oracle Deutsch-Jozsa. Throws PreconditionError when `t` is neither
/// constant nor balanced.
DjResult deutsch_jozsa(const TruthTable& t);

struct GroverResult {
    double success_probability;
    AuditedRun run;
};

/// Oracle sign flip on `marked` followed by inversion about the mean,
/// `iterations` times. With audited = false the trace is still recorded but
/// no factorization reports are computed.
GroverResult grover(int d, BasisLabel marked, std::uint64_t iterations, bool audited = true);

/// sin^2((2k+1) asin(2^{-d/2}))
double grover_success_analytic(int d, std::uint64_t iterations);

/// floor(pi/4 * sqrt(2^d))
std::uint64_t optimal_grover_iterations(int d);

} // namespace qunip
