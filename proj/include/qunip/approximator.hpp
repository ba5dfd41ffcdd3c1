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
 * Interference neuron: the detector intensity of K paths whose phases
 * depend linearly on a real input u,
 *
 *   f(u) = | sum_k c_k exp(i (w_k . u + phi_k)) |^2,
 *
 * fitted to a finite example set by full-batch gradient descent on the mean
 * squared error.
 */
#pragma once

#include "qunip/statevec.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qunip {

struct InterferenceNeuron {
    std::size_t inputs = 0; // m
    std::vector<Amplitude> path_weights;         // c_k, size K
    std::vector<std::vector<double>> phase_weights; // w_k, K x m
    std::vector<double> phase_bias;              // phi_k, size K

    [[nodiscard]] std::size_t paths() const noexcept { return path_weights.size(); }

    /// Throws ValidationError on inconsistent shapes or non-finite values.
    void validate() const;
};

struct Sample {
    std::vector<double> u;
    double y;
};

struct TrainingSet {
    std::size_t inputs = 0;
    std::vector<Sample> samples;

    void validate() const;
};

/// Same layout as the neuron, holding d loss / d parameter.
struct NeuronGradient {
    std::vector<double> c_re;
    std::vector<double> c_im;
    std::vector<std::vector<double>> w;
    std::vector<double> phi;

    [[nodiscard]] double norm() const;
};

/// Seeded initialization: c_k uniform on the disk of radius 1/K, w and phi
/// uniform in [-1, 1].
InterferenceNeuron init_neuron(std::size_t paths, std::size_t inputs, std::uint64_t seed);

double predict(const InterferenceNeuron& n, std::span<const double> u);

/// (1/P) sum_p (f(u_p) - y_p)^2
double loss(const InterferenceNeuron& n, const TrainingSet& t);

NeuronGradient gradient(const InterferenceNeuron& n, const TrainingSet& t);

struct TrainResult {
    InterferenceNeuron fitted;
    /// Loss before the first step, then after each epoch (epochs + 1 entries).
    std::vector<double> loss_history;
};

/// Fixed-step full-batch gradient descent from `initial`. Throws
/// DivergenceError naming the epoch at which the loss stopped being finite.
TrainResult train(const InterferenceNeuron& initial, const TrainingSet& t, double lr,
                  std::size_t epochs);

/// init_neuron(paths, t.inputs, seed) followed by train.
TrainResult train(std::size_t paths, const TrainingSet& t, double lr, std::size_t epochs,
                  std::uint64_t seed);

double rmse(const InterferenceNeuron& n, const TrainingSet& t);

struct ResourceReport {
    std::uint64_t trained_paths;
    std::uint64_t sqrt_p_reference;        // ceil(sqrt(P))
    std::uint64_t exact_realization_units; // 2^d
};

ResourceReport resource_report(std::uint64_t paths, std::uint64_t examples, int d_equiv);

} // namespace qunip
