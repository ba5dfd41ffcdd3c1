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

#include "qunip/interference.hpp"

#include "qunip/errors.hpp"
#include "qunip/kernels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>

namespace qunip {

namespace {

void check_finite(std::span<const Amplitude> v, const char* what) {
    for (const Amplitude& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError(std::string("SlitLattice: non-finite ") + what + " leg");
        }
    }
}

std::string show_log10(double lg) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "~10^%.1f", lg);
    return buf;
}

} // namespace

SlitLattice::SlitLattice(std::vector<std::size_t> slits, std::vector<Amplitude> source,
                         const std::vector<Matrix>& transfers, std::vector<Amplitude> detector)
    : slits_(std::move(slits)), source_(std::move(source)), detector_(std::move(detector)) {
    if (slits_.empty()) {
        throw DomainError("SlitLattice: at least one barrier required");
    }
    if (transfers.size() + 1 != slits_.size()) {
        throw DomainError("SlitLattice: " + std::to_string(slits_.size()) + " barriers need " +
                          std::to_string(slits_.size() - 1) + " transfer stages, got " +
                          std::to_string(transfers.size()));
    }
    for (std::size_t k = 0; k < transfers.size(); ++k) {
        const Matrix& m = transfers[k];
        if (m.size() != slits_[k]) {
            throw DomainError("SlitLattice: stage " + std::to_string(k + 1) + " has " +
                              std::to_string(m.size()) + " rows, expected " +
                              std::to_string(slits_[k]));
        }
        for (const auto& row : m) {
            if (row.size() != slits_[k + 1]) {
                throw DomainError("SlitLattice: stage " + std::to_string(k + 1) +
                                  " row has " + std::to_string(row.size()) +
                                  " columns, expected " + std::to_string(slits_[k + 1]));
            }
            transfer_data_.insert(transfer_data_.end(), row.begin(), row.end());
        }
    }
    validate();
}

SlitLattice::SlitLattice(std::vector<std::size_t> slits, std::vector<Amplitude> source,
                         std::vector<Amplitude> transfer_data, std::vector<Amplitude> detector)
    : slits_(std::move(slits)), source_(std::move(source)),
      transfer_data_(std::move(transfer_data)), detector_(std::move(detector)) {
    validate();
}

void SlitLattice::validate() {
    if (slits_.empty()) {
        throw DomainError("SlitLattice: at least one barrier required");
    }
    std::size_t expected = 0;
    for (std::size_t k = 0; k < slits_.size(); ++k) {
        if (slits_[k] == 0) {
            throw DomainError("SlitLattice: barrier " + std::to_string(k + 1) + " has no slits");
        }
        if (k + 1 < slits_.size()) {
            expected += slits_[k] * slits_[k + 1];
        }
    }
    if (source_.size() != slits_.front()) {
        throw DomainError("SlitLattice: " + std::to_string(source_.size()) +
                          " source legs for " + std::to_string(slits_.front()) + " slits");
    }
    if (detector_.size() != slits_.back()) {
        throw DomainError("SlitLattice: " + std::to_string(detector_.size()) +
                          " detector legs for " + std::to_string(slits_.back()) + " slits");
    }
    if (transfer_data_.size() != expected) {
        throw DomainError("SlitLattice: " + std::to_string(transfer_data_.size()) +
                          " transfer legs, expected " + std::to_string(expected));
    }
    check_finite(source_, "source");
    check_finite(transfer_data_, "transfer");
    check_finite(detector_, "detector");
    offsets_.assign(1, 0);
    for (std::size_t k = 0; k + 1 < slits_.size(); ++k) {
        offsets_.push_back(offsets_.back() + slits_[k] * slits_[k + 1]);
    }
}

std::span<const Amplitude> SlitLattice::transfer(std::size_t k) const {
    if (k < 1 || k >= slits_.size()) {
        throw DomainError("SlitLattice::transfer: stage " + std::to_string(k) + " outside 1.." +
                          std::to_string(slits_.size() - 1));
    }
    return std::span<const Amplitude>(transfer_data_).subspan(offsets_[k - 1],
                                                               slits_[k - 1] * slits_[k]);
}

std::optional<std::uint64_t> path_count(const SlitLattice& l) {
    std::uint64_t n = 1;
    for (std::size_t s : l.slits()) {
        if (n > UINT64_MAX / s) {
            return std::nullopt;
        }
        n *= s;
    }
    return n;
}

double log10_path_count(const SlitLattice& l) {
    double lg = 0.0;
    for (std::size_t s : l.slits()) {
        lg += std::log10(static_cast<double>(s));
    }
    return lg;
}

PathSumResult amplitude_bruteforce(const SlitLattice& l, unsigned threads) {
    const std::optional<std::uint64_t> count = path_count(l);
    if (!count || *count > kPathGuard) {
        throw CapacityError("amplitude_bruteforce: " + show_log10(log10_path_count(l)) +
                            " paths exceeds guard of 1e8");
    }
    const std::size_t b = l.barriers();
    const auto slits = l.slits();
    std::vector<std::span<const Amplitude>> stages;
    for (std::size_t k = 1; k < b; ++k) {
        stages.push_back(l.transfer(k));
    }

    // One partition per barrier-1 slit.
    auto sum_partition = [&](std::size_t first) {
        std::vector<std::size_t> idx(b, 0);
        idx[0] = first;
        Amplitude acc{0.0, 0.0};
        while (true) {
            Amplitude path = l.source()[idx[0]];
            for (std::size_t k = 0; k + 1 < b; ++k) {
                path *= stages[k][idx[k] * slits[k + 1] + idx[k + 1]];
            }
            path *= l.detector()[idx[b - 1]];
            acc += path;
            // Odometer over barriers 2..b; stop once every digit has wrapped.
            std::size_t k = b - 1;
            while (k >= 1) {
                if (++idx[k] < slits[k]) {
                    break;
                }
                idx[k] = 0;
                --k;
            }
            if (k == 0) {
                break;
            }
        }
        return acc;
    };

    const std::size_t parts = slits[0];
    std::vector<Amplitude> partial(parts);
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(parts)));
    if (workers == 1) {
        for (std::size_t p = 0; p < parts; ++p) {
            partial[p] = sum_partition(p);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t p = next++; p < parts; p = next++) {
                    partial[p] = sum_partition(p);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    Amplitude total{0.0, 0.0};
    for (const Amplitude& z : partial) {
        total += z;
    }
    return {total, *count, *count * static_cast<std::uint64_t>(b + 1)};
}

namespace {

// Runs the recursion up to barrier `upto` (1-based) and returns v_upto.
std::vector<Amplitude> forward(const SlitLattice& l, std::size_t upto, std::uint64_t& madds) {
    const kernels::KernelSet& k = kernels::active();
    const auto slits = l.slits();
    std::vector<Amplitude> v(l.source().begin(), l.source().end());
    std::vector<Amplitude> next;
    for (std::size_t stage = 1; stage < upto; ++stage) {
        next.resize(slits[stage]);
        k.vecmat(v, l.transfer(stage), next);
        madds += slits[stage - 1] * slits[stage];
        v.swap(next);
    }
    return v;
}

} // namespace

PathSumResult amplitude_imbedded(const SlitLattice& l) {
    std::uint64_t madds = 0;
    const std::vector<Amplitude> v = forward(l, l.barriers(), madds);
    const Amplitude amp = kernels::active().dot(v, l.detector());
    madds += l.slits().back();
    return {amp, 0, madds};
}

std::vector<Amplitude> slit_amplitudes(const SlitLattice& l, std::size_t k) {
    if (k < 1 || k > l.barriers()) {
        throw DomainError("slit_amplitudes: barrier " + std::to_string(k) + " outside 1.." +
                          std::to_string(l.barriers()));
    }
    std::uint64_t madds = 0;
    return forward(l, k, madds);
}

double intensity(const SlitLattice& l) { return std::norm(amplitude_imbedded(l).amplitude); }

ParameterCount parameter_count(const SlitLattice& l) {
    const auto slits = l.slits();
    ParameterCount c{0, slits.front() + slits.back()};
    for (std::size_t k = 0; k < slits.size(); ++k) {
        c.family_size += slits[k];
        if (k + 1 < slits.size()) {
            c.leg_count += slits[k] * slits[k + 1];
        }
    }
    return c;
}

SlitLattice suffix_lattice(const SlitLattice& l, std::size_t k, std::vector<Amplitude> source) {
    if (k < 1 || k > l.barriers()) {
        throw DomainError("suffix_lattice: barrier " + std::to_string(k) + " outside 1.." +
                          std::to_string(l.barriers()));
    }
    std::vector<std::size_t> slits(l.slits().begin() + static_cast<std::ptrdiff_t>(k - 1),
                                   l.slits().end());
    std::vector<Amplitude> data;
    for (std::size_t s = k; s < l.barriers(); ++s) {
        const auto t = l.transfer(s);
        data.insert(data.end(), t.begin(), t.end());
    }
    return SlitLattice(std::move(slits), std::move(source), std::move(data),
                       std::vector<Amplitude>(l.detector().begin(), l.detector().end()));
}

SlitLattice random_lattice(std::span<const std::size_t> slits, std::uint64_t seed,
                           LegDistribution dist) {
    if (slits.empty()) {
        throw DomainError("random_lattice: at least one barrier required");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    auto gauss = [&] { return Amplitude{normal(rng), normal(rng)}; };
    auto gauss_vec = [&](std::size_t n) {
        std::vector<Amplitude> v(n);
        std::generate(v.begin(), v.end(), gauss);
        return v;
    };
    auto unit_vec = [&](std::size_t n) {
        std::vector<Amplitude> v = gauss_vec(n);
        double n2 = 0.0;
        for (const Amplitude& z : v) {
            n2 += std::norm(z);
        }
        for (Amplitude& z : v) {
            z /= std::sqrt(n2);
        }
        return v;
    };

    std::vector<Amplitude> data;
    if (dist == LegDistribution::Gaussian) {
        std::vector<Amplitude> source = gauss_vec(slits.front());
        for (std::size_t k = 0; k + 1 < slits.size(); ++k) {
            const std::vector<Amplitude> t = gauss_vec(slits[k] * slits[k + 1]);
            data.insert(data.end(), t.begin(), t.end());
        }
        std::vector<Amplitude> detector = gauss_vec(slits.back());
        return SlitLattice({slits.begin(), slits.end()}, std::move(source), std::move(data),
                           std::move(detector));
    }

    const std::size_t n = slits.front();
    if (!std::all_of(slits.begin(), slits.end(), [n](std::size_t s) { return s == n; })) {
        throw DomainError("random_lattice: unitary stages need a uniform slit count");
    }
    std::vector<Amplitude> source = unit_vec(n);
    data.reserve((slits.size() - 1) * n * n);
    const auto dim = static_cast<Eigen::Index>(n);
    for (std::size_t k = 0; k + 1 < slits.size(); ++k) {
        Eigen::MatrixXcd g(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                g(i, j) = gauss();
            }
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q = qr.householderQ();
        const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index j = 0; j < dim; ++j) {
            const Amplitude rjj = r(j, j);
            q.col(j) *= rjj / std::abs(rjj);
        }
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                data.push_back(q(i, j));
            }
        }
    }
    std::vector<Amplitude> detector = unit_vec(n);
    return SlitLattice({slits.begin(), slits.end()}, std::move(source), std::move(data),
                       std::move(detector));
}

} // namespace qunip
