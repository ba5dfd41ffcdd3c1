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

#include "qunip/statevec.hpp"

#include "qunip/config.hpp"
#include "qunip/errors.hpp"
#include "qunip/kernels.hpp"
#include "state_access.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

namespace qunip {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string show(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Bit position of qubit q (1-based, qubit 1 most significant).
inline unsigned bit_of(int d, int q) { return static_cast<unsigned>(d - q); }

void check_qubit(int d, int q, const char* op) {
    if (q < 1 || q > d) {
        throw DomainError(std::string(op) + ": qubit index " + std::to_string(q) +
                          " outside 1.." + std::to_string(d));
    }
}

std::vector<unsigned> checked_bits(int d, std::span<const int> qubits, const char* op) {
    if (qubits.empty()) {
        throw DomainError(std::string(op) + ": empty qubit subset");
    }
    std::vector<unsigned> bits;
    bits.reserve(qubits.size());
    std::uint64_t seen = 0;
    for (int q : qubits) {
        check_qubit(d, q, op);
        const std::uint64_t m = std::uint64_t{1} << bit_of(d, q);
        if ((seen & m) != 0) {
            throw DomainError(std::string(op) + ": qubit " + std::to_string(q) + " listed twice");
        }
        seen |= m;
        bits.push_back(bit_of(d, q));
    }
    return bits;
}

// Gathers the listed bits of x into a compact label, first listed bit most significant.
inline std::uint64_t gather(BasisLabel x, std::span<const unsigned> bits) {
    std::uint64_t out = 0;
    for (unsigned b : bits) {
        out = (out << 1) | ((x >> b) & 1U);
    }
    return out;
}

kernels::Mat2 to_mat(const SingleQubitGate& u) { return {u.u00, u.u01, u.u10, u.u11}; }

void require_unitary(const SingleQubitGate& u, const char* op) {
    if (!u.is_unitary()) {
        throw ValidationError(std::string(op) + ": gate is not unitary within 1e-12");
    }
}

} // namespace

SingleQubitGate SingleQubitGate::hadamard() {
    return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
}
SingleQubitGate SingleQubitGate::pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
SingleQubitGate SingleQubitGate::pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
SingleQubitGate SingleQubitGate::identity() { return {1.0, 0.0, 0.0, 1.0}; }

SingleQubitGate SingleQubitGate::adjoint() const {
    return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
}

bool SingleQubitGate::is_unitary(double tol) const {
    const SingleQubitGate a = adjoint();
    const Amplitude p00 = a.u00 * u00 + a.u01 * u10;
    const Amplitude p01 = a.u00 * u01 + a.u01 * u11;
    const Amplitude p10 = a.u10 * u00 + a.u11 * u10;
    const Amplitude p11 = a.u10 * u01 + a.u11 * u11;
    return std::abs(p00 - 1.0) <= tol && std::abs(p01) <= tol && std::abs(p10) <= tol &&
           std::abs(p11 - 1.0) <= tol;
}

PureState::PureState(int num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    if (num_qubits_ < 1 || num_qubits_ > kHardMaxQubits) {
        throw CapacityError("PureState: qubit count " + std::to_string(num_qubits_) +
                            " out of range");
    }
    if (amps_.size() != (std::size_t{1} << num_qubits_)) {
        throw ValidationError("PureState: expected " +
                              std::to_string(std::size_t{1} << num_qubits_) +
                              " amplitudes, got " + std::to_string(amps_.size()));
    }
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!std::isfinite(amps_[i].real()) || !std::isfinite(amps_[i].imag())) {
            throw ValidationError("PureState: non-finite amplitude at index " + std::to_string(i));
        }
    }
    const double n2 = norm_squared(amps_);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw ValidationError("PureState: squared norm " + show(n2) + " differs from 1");
    }
}

PureState::PureState(Trusted, int num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    assert(std::abs(norm_squared(amps_) - 1.0) <= kNormTolerance);
}

PureState PureState::normalized(int num_qubits, std::vector<Amplitude> amps) {
    const double n2 = norm_squared(amps);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw ValidationError("PureState::normalized: squared norm " + show(n2));
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Amplitude& a : amps) {
        a *= scale;
    }
    return PureState(num_qubits, std::move(amps));
}

PureState basis_state(int d, BasisLabel x) {
    check_qubit_capacity(d, "basis_state");
    const std::size_t dim = std::size_t{1} << d;
    if (x >= dim) {
        throw DomainError("basis_state: label " + std::to_string(x) + " outside [0, " +
                          std::to_string(dim) + ")");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[x] = 1.0;
    return detail::StateAccess::adopt(d, std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b) {
    const int d = a.num_qubits() + b.num_qubits();
    check_qubit_capacity(d, "tensor");
    std::vector<Amplitude> amps(std::size_t{1} << d);
    const auto aa = a.amplitudes();
    const auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) {
        for (std::size_t j = 0; j < bb.size(); ++j) {
            amps[i * bb.size() + j] = aa[i] * bb[j];
        }
    }
    return detail::StateAccess::adopt(d, std::move(amps));
}

PureState apply_single(const PureState& s, int qubit, const SingleQubitGate& u) {
    return apply_controlled(s, {}, qubit, u);
}

PureState apply_controlled(const PureState& s, std::span<const int> controls, int target,
                           const SingleQubitGate& u) {
    const int d = s.num_qubits();
    check_qubit(d, target, "apply_controlled");
    require_unitary(u, "apply_controlled");
    std::uint64_t mask = 0;
    for (int c : controls) {
        check_qubit(d, c, "apply_controlled");
        if (c == target) {
            throw DomainError("apply_controlled: qubit " + std::to_string(c) +
                              " is both control and target");
        }
        mask |= std::uint64_t{1} << bit_of(d, c);
    }
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    kernels::active().apply_pairs(amps, std::size_t{1} << bit_of(d, target), to_mat(u), mask);
    return detail::StateAccess::adopt(d, std::move(amps));
}

PureState phase_flip(const PureState& s, const std::function<bool(BasisLabel)>& predicate) {
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (predicate(x)) {
            amps[x] = -amps[x];
        }
    }
    return detail::StateAccess::adopt(s.num_qubits(), std::move(amps));
}

PureState hadamard_layer(const PureState& s, int first, int last) {
    const int d = s.num_qubits();
    check_qubit(d, first, "hadamard_layer");
    check_qubit(d, last, "hadamard_layer");
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    const kernels::Mat2 h = to_mat(SingleQubitGate::hadamard());
    const kernels::KernelSet& k = kernels::active();
    for (int q = first; q <= last; ++q) {
        k.apply_pairs(amps, std::size_t{1} << bit_of(d, q), h, 0);
    }
    return detail::StateAccess::adopt(d, std::move(amps));
}

Amplitude inner(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner: qubit counts differ (" + std::to_string(a.num_qubits()) +
                          " vs " + std::to_string(b.num_qubits()) + ")");
    }
    return kernels::active().inner(a.amplitudes(), b.amplitudes());
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner(a, b)); }

double norm_squared(std::span<const Amplitude> amps) { return kernels::active().norm2(amps); }

Distribution measure_distribution(const PureState& s, std::span<const int> qubits) {
    const int d = s.num_qubits();
    const std::vector<unsigned> bits = checked_bits(d, qubits, "measure_distribution");
    std::vector<double> probs(std::size_t{1} << bits.size(), 0.0);
    const auto amps = s.amplitudes();
    for (std::size_t x = 0; x < amps.size(); ++x) {
        probs[gather(x, bits)] += std::norm(amps[x]);
    }
    Distribution out;
    const int width = static_cast<int>(bits.size());
    for (std::size_t o = 0; o < probs.size(); ++o) {
        if (probs[o] >= kProbabilityFloor) {
            out.emplace(to_bitstring(o, width), probs[o]);
        }
    }
    return out;
}

PureState conditional_state(const PureState& s, std::span<const int> qubits,
                            std::string_view outcome) {
    const int d = s.num_qubits();
    const std::vector<unsigned> bits = checked_bits(d, qubits, "conditional_state");
    if (outcome.size() != bits.size()) {
        throw DomainError("conditional_state: outcome '" + std::string(outcome) + "' has " +
                          std::to_string(outcome.size()) + " bits for " +
                          std::to_string(bits.size()) + " qubits");
    }
    if (static_cast<int>(bits.size()) == d) {
        throw DomainError("conditional_state: no qubits remain after conditioning");
    }
    const std::uint64_t want = parse_bitstring(outcome);

    std::vector<unsigned> rest;
    for (int q = 1; q <= d; ++q) {
        const unsigned b = bit_of(d, q);
        if (std::find(bits.begin(), bits.end(), b) == bits.end()) {
            rest.push_back(b);
        }
    }
    const int dr = static_cast<int>(rest.size());
    std::vector<Amplitude> out(std::size_t{1} << dr, Amplitude{0.0, 0.0});
    const auto amps = s.amplitudes();
    double p = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (gather(x, bits) == want) {
            out[gather(x, rest)] = amps[x];
            p += std::norm(amps[x]);
        }
    }
    if (p <= kPostSelectionFloor) {
        throw PostSelectionError("conditional_state: outcome '" + std::string(outcome) +
                                 "' has probability " + show(p));
    }
    const double scale = 1.0 / std::sqrt(p);
    for (Amplitude& a : out) {
        a *= scale;
    }
    return detail::StateAccess::adopt(dr, std::move(out));
}

std::string to_bitstring(BasisLabel x, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((x >> (width - 1 - i)) & 1U) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

BasisLabel parse_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 64) {
        throw DomainError("parse_bitstring: '" + std::string(bits) + "' must have 1..64 bits");
    }
    BasisLabel x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw DomainError("parse_bitstring: '" + std::string(bits) + "' is not a bitstring");
        }
        x = (x << 1) | static_cast<BasisLabel>(c - '0');
    }
    return x;
}

} // namespace qunip
