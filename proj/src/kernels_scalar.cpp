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

#include "qunip/kernels.hpp"

namespace qunip::kernels {

namespace {

// Plain formula; std::complex operator* goes through __muldc3 for
// Annex G inf/nan recovery, which we never need.
inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

void apply_pairs(std::span<cplx> amps, std::size_t stride, const Mat2& u,
                 std::uint64_t ctrl_mask) {
    const std::size_t n = amps.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; ++j) {
            const std::size_t i0 = base + j;
            if ((i0 & ctrl_mask) != ctrl_mask) {
                continue;
            }
            const std::size_t i1 = i0 + stride;
            const cplx x = amps[i0];
            const cplx y = amps[i1];
            amps[i0] = mul(u.m00, x) + mul(u.m01, y);
            amps[i1] = mul(u.m10, x) + mul(u.m11, y);
        }
    }
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2(std::span<const cplx> a) {
    double acc = 0.0;
    for (const cplx& z : a) {
        acc += z.real() * z.real() + z.imag() * z.imag();
    }
    return acc;
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += mul(a[i], b[i]);
    }
    return acc;
}

void vecmat(std::span<const cplx> v, std::span<const cplx> t, std::span<cplx> out) {
    const std::size_t cols = out.size();
    for (cplx& o : out) {
        o = {0.0, 0.0};
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx vi = v[i];
        const cplx* row = t.data() + i * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            out[j] += mul(vi, row[j]);
        }
    }
}

constexpr KernelSet kScalar{"scalar", apply_pairs, inner, norm2, dot, vecmat};

} // namespace

const KernelSet& scalar() { return kScalar; }

} // namespace qunip::kernels
