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
 * Dense pure states of d qubits.
 *
 * Basis labels run over [0, 2^d). Qubits are numbered 1..d and qubit 1 is
 * the most significant bit of the label, so label 0b011 on three qubits is
 * the bitstring "011" read left to right as (x_1, x_2, x_3).
 *
 * States are values: every operation returns a fresh state and leaves its
 * inputs untouched.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qunip {

namespace detail {
struct StateAccess;
}

using Amplitude = std::complex<double>;
using BasisLabel = std::uint64_t;

/// Outcome bitstring -> probability. Outcomes below kProbabilityFloor are
/// omitted.
using Distribution = std::map<std::string, double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kProbabilityFloor = 1e-15;
inline constexpr double kPostSelectionFloor = 1e-12;

struct SingleQubitGate {
    Amplitude u00, u01, u10, u11;

    static SingleQubitGate hadamard();
    static SingleQubitGate pauli_x();
    static SingleQubitGate pauli_z();
    static SingleQubitGate identity();

    [[nodiscard]] SingleQubitGate adjoint() const;
    /// U^dagger U == I entrywise within `tol`.
    [[nodiscard]] bool is_unitary(double tol = kUnitaryTolerance) const;
};

class PureState {
  public:
    /// Validates length 2^d, finite entries, and unit norm within kNormTolerance.
    PureState(int num_qubits, std::vector<Amplitude> amps);

    /// Rescales `amps` to unit norm. Throws ValidationError on a zero or
    /// non-finite vector.
    static PureState normalized(int num_qubits, std::vector<Amplitude> amps);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Amplitude operator[](BasisLabel x) const { return amps_[x]; }

  private:
    struct Trusted {};
    PureState(Trusted, int num_qubits, std::vector<Amplitude> amps);

    friend struct detail::StateAccess;

    int num_qubits_;
    std::vector<Amplitude> amps_;
};

PureState basis_state(int d, BasisLabel x);

/// Result label x_a * 2^{d_b} + x_b carries a[x_a] * b[x_b].
PureState tensor(const PureState& a, const PureState& b);

PureState apply_single(const PureState& s, int qubit, const SingleQubitGate& u);

/// Applies `u` to `target` on the amplitudes whose control bits are all 1.
/// An empty control set reduces to apply_single.
PureState apply_controlled(const PureState& s, std::span<const int> controls, int target,
                           const SingleQubitGate& u);

/// a_x -> -a_x wherever predicate(x) holds.
PureState phase_flip(const PureState& s, const std::function<bool(BasisLabel)>& predicate);

/// Hadamard on each of qubits first..last (inclusive).
PureState hadamard_layer(const PureState& s, int first, int last);

/// sum_x conj(a_x) b_x
Amplitude inner(const PureState& a, const PureState& b);

/// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

double norm_squared(std::span<const Amplitude> amps);

/// Marginal distribution over `qubits`, outcome bits in the listed order.
Distribution measure_distribution(const PureState& s, std::span<const int> qubits);

/// Post-selects `qubits` on `outcome` and renormalizes. The result lives on
/// the remaining qubits in their original order.
PureState conditional_state(const PureState& s, std::span<const int> qubits,
                            std::string_view outcome);

/// Label as a bitstring of `width` characters, most significant first.
std::string to_bitstring(BasisLabel x, int width);

/// Inverse of to_bitstring. Throws DomainError on characters other than 0/1
/// or on more than 64 bits.
BasisLabel parse_bitstring(std::string_view bits);

} // namespace qunip
