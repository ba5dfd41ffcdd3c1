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

// Central-difference gradient of the interference-neuron loss. Evaluates the
// model directly from its definition rather than through qunip::loss.
#pragma once

#include "qunip/approximator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace fd {

// Accumulates in long double so that the difference quotient below is not
// dominated by rounding in the loss.
inline long double model_loss(const qunip::InterferenceNeuron& n, const qunip::TrainingSet& t) {
    long double s = 0.0L;
    for (const qunip::Sample& p : t.samples) {
        std::complex<long double> z = 0.0L;
        for (std::size_t k = 0; k < n.paths(); ++k) {
            long double phase = n.phase_bias[k];
            for (std::size_t j = 0; j < n.inputs; ++j) {
                phase += static_cast<long double>(n.phase_weights[k][j]) * p.u[j];
            }
            const std::complex<long double> c(n.path_weights[k].real(), n.path_weights[k].imag());
            z += c * std::polar(1.0L, phase);
        }
        const long double r = std::norm(z) - p.y;
        s += r * r;
    }
    return s / static_cast<long double>(t.samples.size());
}

/// Parameter order: Re c, Im c, w (row-major K x m), phi.
inline std::vector<double*> parameters(qunip::InterferenceNeuron& n) {
    std::vector<double*> out;
    for (auto& c : n.path_weights) {
        out.push_back(&reinterpret_cast<double(&)[2]>(c)[0]);
    }
    for (auto& c : n.path_weights) {
        out.push_back(&reinterpret_cast<double(&)[2]>(c)[1]);
    }
    for (auto& row : n.phase_weights) {
        for (double& w : row) {
            out.push_back(&w);
        }
    }
    for (double& p : n.phase_bias) {
        out.push_back(&p);
    }
    return out;
}

inline std::vector<double> central_gradient(qunip::InterferenceNeuron n,
                                            const qunip::TrainingSet& t, double h) {
    std::vector<double> g;
    for (double* p : parameters(n)) {
        const double keep = *p;
        *p = keep + h;
        const long double up = model_loss(n, t);
        *p = keep - h;
        const long double down = model_loss(n, t);
        *p = keep;
        g.push_back(static_cast<double>((up - down) / (2.0L * h)));
    }
    return g;
}

inline std::vector<double> flatten(const qunip::NeuronGradient& g) {
    std::vector<double> out(g.c_re.begin(), g.c_re.end());
    out.insert(out.end(), g.c_im.begin(), g.c_im.end());
    for (const auto& row : g.w) {
        out.insert(out.end(), row.begin(), row.end());
    }
    out.insert(out.end(), g.phi.begin(), g.phi.end());
    return out;
}

/// |a - b| / max(|a|, |b|), with the denominator floored at 1e-6 so that
/// components which are zero to rounding compare absolutely (to 1e-11).
inline double relative_error(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-6});
}

} // namespace fd
