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

#include "qunip/entanglement.hpp"

#include "qunip/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace qunip {

namespace {

constexpr double kPhaseFloor = 1e-12;

void check_tol(double tol, const char* op) {
    if (!(tol > 0.0 && tol < 1.0)) {
        throw DomainError(std::string(op) + ": tolerance " + std::to_string(tol) +
                          " outside (0, 1)");
    }
}

struct CutBits {
    std::vector<unsigned> rows;
    std::vector<unsigned> cols;
};

CutBits resolve_cut(int d, const CutSpec& cut) {
    if (cut.left.empty() || static_cast<int>(cut.left.size()) >= d) {
        throw DomainError("schmidt_rank: cut must be a non-empty proper subset of " +
                          std::to_string(d) + " qubits, got " + std::to_string(cut.left.size()));
    }
    std::vector<bool> on_left(static_cast<std::size_t>(d) + 1, false);
    CutBits bits;
    for (int q : cut.left) {
        if (q < 1 || q > d) {
            throw DomainError("schmidt_rank: qubit " + std::to_string(q) + " outside 1.." +
                              std::to_string(d));
        }
        if (on_left[static_cast<std::size_t>(q)]) {
            throw DomainError("schmidt_rank: qubit " + std::to_string(q) + " listed twice");
        }
        on_left[static_cast<std::size_t>(q)] = true;
        bits.rows.push_back(static_cast<unsigned>(d - q));
    }
    for (int q = 1; q <= d; ++q) {
        if (!on_left[static_cast<std::size_t>(q)]) {
            bits.cols.push_back(static_cast<unsigned>(d - q));
        }
    }
    return bits;
}

inline std::uint64_t gather(std::uint64_t x, const std::vector<unsigned>& bits) {
    std::uint64_t out = 0;
    for (unsigned b : bits) {
        out = (out << 1) | ((x >> b) & 1U);
    }
    return out;
}

Eigen::MatrixXcd amplitude_matrix(const PureState& s, const CutSpec& cut) {
    const CutBits bits = resolve_cut(s.num_qubits(), cut);
    Eigen::MatrixXcd m(Eigen::Index{1} << bits.rows.size(), Eigen::Index{1} << bits.cols.size());
    const auto amps = s.amplitudes();
    for (std::size_t x = 0; x < amps.size(); ++x) {
        m(static_cast<Eigen::Index>(gather(x, bits.rows)),
          static_cast<Eigen::Index>(gather(x, bits.cols))) = amps[x];
    }
    return m;
}

QubitFactor phase_fixed(Amplitude alpha, Amplitude beta) {
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= n;
    beta /= n;
    const Amplitude lead = std::abs(alpha) > kPhaseFloor ? alpha : beta;
    const Amplitude phase = std::conj(lead) / std::abs(lead);
    alpha *= phase;
    beta *= phase;
    // Force the reference component exactly real.
    if (std::abs(alpha) > kPhaseFloor) {
        alpha = std::abs(alpha);
    } else {
        alpha = 0.0;
        beta = std::abs(beta);
    }
    return {alpha, beta};
}

} // namespace

std::vector<double> schmidt_coefficients(const PureState& s, const CutSpec& cut) {
    const Eigen::MatrixXcd m = amplitude_matrix(s, cut);
    // BDCSVD falls back to one-sided Jacobi below its block size.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const Eigen::VectorXd sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

int schmidt_rank(const PureState& s, const CutSpec& cut, double tol) {
    check_tol(tol, "schmidt_rank");
    const std::vector<double> sv = schmidt_coefficients(s, cut);
    const double cutoff = tol * sv.front();
    return static_cast<int>(
        std::count_if(sv.begin(), sv.end(), [cutoff](double v) { return v > cutoff; }));
}

PureState product_state(const std::vector<QubitFactor>& factors) {
    if (factors.empty()) {
        throw DomainError("product_state: no factors");
    }
    std::vector<Amplitude> amps{Amplitude{1.0, 0.0}};
    for (const auto& [alpha, beta] : factors) {
        std::vector<Amplitude> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * alpha;
            next[2 * i + 1] = amps[i] * beta;
        }
        amps = std::move(next);
    }
    return PureState::normalized(static_cast<int>(factors.size()), std::move(amps));
}

FactorizationReport factor_product(const PureState& s, double tol) {
    check_tol(tol, "factor_product");
    const int d = s.num_qubits();
    FactorizationReport report;

    CutSpec prefix;
    for (int k = 1; k < d; ++k) {
        prefix.left.push_back(k);
        report.prefix_schmidt_ranks.push_back(schmidt_rank(s, prefix, tol));
    }
    report.is_product = std::all_of(report.prefix_schmidt_ranks.begin(),
                                    report.prefix_schmidt_ranks.end(),
                                    [](int r) { return r == 1; });

    // Greedy peel: the 2 x 2^{rest} matrix has rows (amps with leading bit 0,
    // amps with leading bit 1). Its leading left singular vector is the best
    // single-qubit factor; projecting onto it leaves the remaining state.
    std::vector<QubitFactor> factors;
    Eigen::VectorXcd rest = Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(),
                                                                 static_cast<Eigen::Index>(s.dimension()));
    for (int q = 1; q < d; ++q) {
        const Eigen::Index half = rest.size() / 2;
        const auto row0 = rest.head(half);
        const auto row1 = rest.tail(half);
        Eigen::Matrix2cd gram;
        gram(0, 0) = row0.squaredNorm();
        gram(1, 1) = row1.squaredNorm();
        gram(0, 1) = row1.dot(row0); // sum_k row0_k conj(row1_k)
        gram(1, 0) = std::conj(gram(0, 1));
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(gram);
        const Eigen::Vector2cd u = eig.eigenvectors().col(1);
        const QubitFactor f = phase_fixed(u(0), u(1));
        factors.push_back(f);
        Eigen::VectorXcd next = std::conj(f.first) * row0 + std::conj(f.second) * row1;
        const double n = next.norm();
        if (n > 0.0) {
            next /= n;
        }
        rest = std::move(next);
    }
    factors.push_back(phase_fixed(rest(0), rest(1)));

    const PureState rebuilt = product_state(factors);
    report.residual = std::max(0.0, 1.0 - fidelity(rebuilt, s));
    if (report.is_product) {
        report.factors = std::move(factors);
    }
    return report;
}

double two_qubit_tangle(const PureState& s) {
    if (s.num_qubits() != 2) {
        throw DomainError("two_qubit_tangle: needs 2 qubits, got " +
                          std::to_string(s.num_qubits()));
    }
    return std::abs(s[0] * s[3] - s[1] * s[2]);
}

std::uint64_t description_length(int d, bool product) {
    if (d < 1) {
        throw DomainError("description_length: d = " + std::to_string(d) + " must be >= 1");
    }
    if (product) {
        return 2 * static_cast<std::uint64_t>(d);
    }
    if (d >= 64) {
        throw CapacityError("description_length: 2^" + std::to_string(d) +
                            " does not fit in 64 bits");
    }
    return std::uint64_t{1} << d;
}

} // namespace qunip
