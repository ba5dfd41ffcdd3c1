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
 * Source-to-detector amplitude through b barriers of slits.
 *
 * A photon leaves the source, passes one slit in each barrier in order and
 * reaches a single detector. Legs are free complex transition amplitudes:
 *
 *   source -> slit i of barrier 1          source(i)
 *   slit i of barrier k -> slit j of k+1   transfer(k)[i][j]
 *   slit i of barrier b -> detector        detector(i)
 *
 * Only forward legs exist (no reflections, no legs inside a barrier), so
 * the amplitude to reach every slit of barrier k+1 follows from the
 * amplitudes at barrier k alone. amplitude_imbedded runs that forward
 * recursion in O(sum N_k N_{k+1}); amplitude_bruteforce sums the product of
 * legs over all prod N_k paths and serves as its oracle.
 */
#pragma once

#include "qunip/statevec.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qunip {

class SlitLattice {
  public:
    /// Row-major N_k x N_{k+1} matrix per stage.
    using Matrix = std::vector<std::vector<Amplitude>>;

    SlitLattice(std::vector<std::size_t> slits, std::vector<Amplitude> source,
                const std::vector<Matrix>& transfers, std::vector<Amplitude> detector);

    /// Stage matrices concatenated row-major, stage 1 first.
    SlitLattice(std::vector<std::size_t> slits, std::vector<Amplitude> source,
                std::vector<Amplitude> transfer_data, std::vector<Amplitude> detector);

    [[nodiscard]] std::size_t barriers() const noexcept { return slits_.size(); }
    [[nodiscard]] std::span<const std::size_t> slits() const noexcept { return slits_; }
    [[nodiscard]] std::span<const Amplitude> source() const noexcept { return source_; }
    [[nodiscard]] std::span<const Amplitude> detector() const noexcept { return detector_; }

    /// Stage k = 1..b-1, N_k x N_{k+1} row-major.
    [[nodiscard]] std::span<const Amplitude> transfer(std::size_t k) const;

  private:
    void validate();

    std::vector<std::size_t> slits_;
    std::vector<Amplitude> source_;
    std::vector<Amplitude> transfer_data_;
    std::vector<std::size_t> offsets_;
    std::vector<Amplitude> detector_;
};

struct PathSumResult {
    Amplitude amplitude;
    std::uint64_t paths_enumerated = 0;
    std::uint64_t multiply_add_count = 0;
};

inline constexpr std::uint64_t kPathGuard = 100'000'000;

/// prod N_k, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> path_count(const SlitLattice& l);

/// log10(prod N_k); finite even when the count itself is astronomically large.
double log10_path_count(const SlitLattice& l);

/// Sum over all slit sequences of the product of legs. Path space is split
/// by the barrier-1 slit; each part is summed in odometer order and the
/// parts are added in slit order, so the result does not depend on
/// `threads`. Each path costs b multiplications and one addition.
PathSumResult amplitude_bruteforce(const SlitLattice& l, unsigned threads = 1);

/// Forward recursion v1 = source, v_{k+1} = v_k T_k, amplitude = v_b . detector.
PathSumResult amplitude_imbedded(const SlitLattice& l);

/// v_k: amplitudes to reach each slit of barrier k (1-based).
std::vector<Amplitude> slit_amplitudes(const SlitLattice& l, std::size_t k);

/// |amplitude|^2. Legs are not constrained to be unitary, so this may exceed 1.
double intensity(const SlitLattice& l);

struct ParameterCount {
    /// sum N_k: one imbedded amplitude per slit.
    std::uint64_t family_size;
    /// N_1 + sum N_k N_{k+1} + N_b raw legs.
    std::uint64_t leg_count;
};

ParameterCount parameter_count(const SlitLattice& l);

/// Barriers k..b with `source` replacing the legs into barrier k.
SlitLattice suffix_lattice(const SlitLattice& l, std::size_t k, std::vector<Amplitude> source);

enum class LegDistribution {
    /// Independent complex Gaussian legs, E|leg|^2 = 1.
    Gaussian,
    /// Haar-like unitary stages and unit-norm source/detector vectors; needs
    /// uniform N. Keeps amplitudes O(1) for any b.
    Unitary,
};

SlitLattice random_lattice(std::span<const std::size_t> slits, std::uint64_t seed,
                           LegDistribution dist = LegDistribution::Gaussian);

} // namespace qunip
