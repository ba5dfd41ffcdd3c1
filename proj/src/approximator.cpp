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

#include "qunip/approximator.hpp"

#include "qunip/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qunip {

namespace {

bool finite(double v) { return std::isfinite(v); }
bool finite(Amplitude z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_dims(const InterferenceNeuron& n, std::size_t m, const char* op) {
    if (n.inputs != m) {
        throw DomainError(std::string(op) + ": input has dimension " + std::to_string(m) +
                          ", neuron expects " + std::to_string(n.inputs));
    }
}

void check_set(const InterferenceNeuron& n, const TrainingSet& t, const char* op) {
    if (t.samples.empty()) {
        throw DomainError(std::string(op) + ": empty training set");
    }
    check_dims(n, t.inputs, op);
}

// Path phasors e^{i theta_k} and the detector amplitude z for one input.
struct Forward {
    std::vector<Amplitude> phasor;
    Amplitude z;
};

Forward forward(const InterferenceNeuron& n, std::span<const double> u) {
    Forward f{std::vector<Amplitude>(n.paths()), {0.0, 0.0}};
    for (std::size_t k = 0; k < n.paths(); ++k) {
        double theta = n.phase_bias[k];
        for (std::size_t j = 0; j < n.inputs; ++j) {
            theta += n.phase_weights[k][j] * u[j];
        }
        f.phasor[k] = std::polar(1.0, theta);
        f.z += n.path_weights[k] * f.phasor[k];
    }
    return f;
}

} // namespace

void InterferenceNeuron::validate() const {
    const std::size_t k = path_weights.size();
    if (k == 0) {
        throw ValidationError("InterferenceNeuron: no paths");
    }
    if (phase_weights.size() != k || phase_bias.size() != k) {
        throw ValidationError("InterferenceNeuron: " + std::to_string(k) + " path weights but " +
                              std::to_string(phase_weights.size()) + " phase-weight rows and " +
                              std::to_string(phase_bias.size()) + " biases");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (phase_weights[i].size() != inputs) {
            throw ValidationError("InterferenceNeuron: phase-weight row " + std::to_string(i) +
                                  " has " + std::to_string(phase_weights[i].size()) +
                                  " entries, expected " + std::to_string(inputs));
        }
        bool ok = finite(path_weights[i]) && finite(phase_bias[i]);
        for (double w : phase_weights[i]) {
            ok = ok && finite(w);
        }
        if (!ok) {
            throw ValidationError("InterferenceNeuron: non-finite parameter on path " +
                                  std::to_string(i));
        }
    }
}

void TrainingSet::validate() const {
    if (samples.empty()) {
        throw ValidationError("TrainingSet: no samples");
    }
    for (std::size_t p = 0; p < samples.size(); ++p) {
        if (samples[p].u.size() != inputs) {
            throw ValidationError("TrainingSet: sample " + std::to_string(p) + " has " +
                                  std::to_string(samples[p].u.size()) + " features, expected " +
                                  std::to_string(inputs));
        }
    }
}

double NeuronGradient::norm() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        acc += c_re[k] * c_re[k] + c_im[k] * c_im[k] + phi[k] * phi[k];
        for (double g : w[k]) {
            acc += g * g;
        }
    }
    return std::sqrt(acc);
}

InterferenceNeuron init_neuron(std::size_t paths, std::size_t inputs, std::uint64_t seed) {
    if (paths == 0) {
        throw DomainError("init_neuron: path count must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    InterferenceNeuron n;
    n.inputs = inputs;
    const double radius = 1.0 / static_cast<double>(paths);
    for (std::size_t k = 0; k < paths; ++k) {
        // sqrt for area-uniform radius
        const double r = radius * std::sqrt(unit(rng));
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        n.path_weights.push_back(std::polar(r, angle));
        std::vector<double> w(inputs);
        for (double& x : w) {
            x = sym(rng);
        }
        n.phase_weights.push_back(std::move(w));
        n.phase_bias.push_back(sym(rng));
    }
    return n;
}

double predict(const InterferenceNeuron& n, std::span<const double> u) {
    check_dims(n, u.size(), "predict");
    return std::norm(forward(n, u).z);
}

double loss(const InterferenceNeuron& n, const TrainingSet& t) {
    check_set(n, t, "loss");
    double acc = 0.0;
    for (const Sample& s : t.samples) {
        const double r = std::norm(forward(n, s.u).z) - s.y;
        acc += r * r;
    }
    return acc / static_cast<double>(t.samples.size());
}

NeuronGradient gradient(const InterferenceNeuron& n, const TrainingSet& t) {
    check_set(n, t, "gradient");
    const std::size_t kk = n.paths();
    NeuronGradient g{std::vector<double>(kk, 0.0), std::vector<double>(kk, 0.0),
                     std::vector<std::vector<double>>(kk, std::vector<double>(n.inputs, 0.0)),
                     std::vector<double>(kk, 0.0)};
    const double scale = 2.0 / static_cast<double>(t.samples.size());
    for (const Sample& s : t.samples) {
        const Forward f = forward(n, s.u);
        const double r = scale * (std::norm(f.z) - s.y);
        const Amplitude zc = std::conj(f.z);
        for (std::size_t k = 0; k < kk; ++k) {
            // df/dRe c = 2 Re(z* e), df/dIm c = -2 Im(z* e), df/dtheta = -2 Im(z* c e)
            const Amplitude ze = zc * f.phasor[k];
            g.c_re[k] += r * 2.0 * ze.real();
            g.c_im[k] -= r * 2.0 * ze.imag();
            const double dtheta = -2.0 * (ze * n.path_weights[k]).imag();
            g.phi[k] += r * dtheta;
            for (std::size_t j = 0; j < n.inputs; ++j) {
                g.w[k][j] += r * dtheta * s.u[j];
            }
        }
    }
    return g;
}

TrainResult train(const InterferenceNeuron& initial, const TrainingSet& t, double lr,
                  std::size_t epochs) {
    if (!(lr > 0.0) || !std::isfinite(lr)) {
        throw DomainError("train: learning rate " + std::to_string(lr) + " must be positive");
    }
    initial.validate();
    t.validate();
    TrainResult out{initial, {}};
    out.loss_history.reserve(epochs + 1);
    out.loss_history.push_back(loss(out.fitted, t));
    if (!std::isfinite(out.loss_history.back())) {
        throw DivergenceError("train: non-finite loss at epoch 0", 0);
    }
    InterferenceNeuron& n = out.fitted;
    for (std::size_t e = 1; e <= epochs; ++e) {
        const NeuronGradient g = gradient(n, t);
        for (std::size_t k = 0; k < n.paths(); ++k) {
            n.path_weights[k] -= lr * Amplitude{g.c_re[k], g.c_im[k]};
            n.phase_bias[k] -= lr * g.phi[k];
            for (std::size_t j = 0; j < n.inputs; ++j) {
                n.phase_weights[k][j] -= lr * g.w[k][j];
            }
        }
        const double l = loss(n, t);
        if (!std::isfinite(l)) {
            throw DivergenceError("train: non-finite loss at epoch " + std::to_string(e),
                                  static_cast<long>(e));
        }
        out.loss_history.push_back(l);
    }
    return out;
}

TrainResult train(std::size_t paths, const TrainingSet& t, double lr, std::size_t epochs,
                  std::uint64_t seed) {
    return train(init_neuron(paths, t.inputs, seed), t, lr, epochs);
}

double rmse(const InterferenceNeuron& n, const TrainingSet& t) { return std::sqrt(loss(n, t)); }

ResourceReport resource_report(std::uint64_t paths, std::uint64_t examples, int d_equiv) {
    if (paths == 0 || examples == 0 || d_equiv < 1) {
        throw DomainError("resource_report: arguments must be positive (K=" +
                          std::to_string(paths) + ", P=" + std::to_string(examples) +
                          ", d=" + std::to_string(d_equiv) + ")");
    }
    if (d_equiv >= 64) {
        throw CapacityError("resource_report: 2^" + std::to_string(d_equiv) +
                            " does not fit in 64 bits");
    }
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(examples)));
    while (root * root > examples) {
        --root;
    }
    while (root * root < examples) {
        ++root;
    }
    return {paths, root, std::uint64_t{1} << d_equiv};
}

} // namespace qunip
