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
 * Product-state detection and bipartite structure of pure states.
 *
 * A general d-qubit state needs 2^d amplitudes; a product of single-qubit
 * states needs 2d. The tools here decide which case a given state is in.
 */
#pragma once

#include "qunip/statevec.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qunip {

inline constexpr double kDefaultRankTolerance = 1e-8;

/// Bipartition: `left` lists qubits (1-based) whose bits index matrix rows,
/// first listed most significant; all other qubits index the columns.
struct CutSpec {
    std::vector<int> left;
};

/// Single-qubit factor alpha|0> + beta|1>.
using QubitFactor = std::pair<Amplitude, Amplitude>;

struct FactorizationReport {
    bool is_product = false;
    /// Present only when is_product.
    std::optional<std::vector<QubitFactor>> factors;
    /// Rank at each prefix cut {1..k} | {k+1..d}, k = 1..d-1.
    std::vector<int> prefix_schmidt_ranks;
    /// 1 - |<product of peeled factors | input>|^2
    double residual = 1.0;
};

/// Singular values of the amplitude matrix across `cut`, descending.
std::vector<double> schmidt_coefficients(const PureState& s, const CutSpec& cut);

/// Number of singular values above tol * sigma_max.
int schmidt_rank(const PureState& s, const CutSpec& cut, double tol = kDefaultRankTolerance);

/// Peels qubits left to right via the leading singular vector at each step.
/// is_product holds iff every prefix rank is 1. Factors are phase-fixed so
/// the first nonzero component is real positive.
FactorizationReport factor_product(const PureState& s, double tol = kDefaultRankTolerance);

/// Tensor product of single-qubit factors, qubit 1 first.
PureState product_state(const std::vector<QubitFactor>& factors);

/// |a00 a11 - a01 a10| for a two-qubit state; zero iff product.
double two_qubit_tangle(const PureState& s);

/// Complex parameters needed to describe d qubits: 2^d in general, 2d for a
/// product state.
std::uint64_t description_length(int d, bool product);

} // namespace qunip
