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
 * Complex arithmetic inner loops shared by the state-vector and interference
 * modules. Each kernel has a scalar reference implementation and, on x86-64,
 * an AVX2+FMA variant. The variant is picked once per process from CPUID;
 * QUNIP_KERNELS=scalar|avx2 overrides the choice.
 *
 * Variants agree to rounding, not bitwise: FMA contraction and the
 * four-lane reduction order differ from the scalar loop. Within one variant
 * results are deterministic.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qunip::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    cplx m00, m01, m10, m11;
};

struct KernelSet {
    std::string_view name;

    /// For every index i with bit `stride` clear and (i & ctrl_mask) == ctrl_mask,
    /// replaces (a[i], a[i+stride]) by u * (a[i], a[i+stride]).
    /// `stride` is a power of two, ctrl_mask must not contain it.
    void (*apply_pairs)(std::span<cplx> amps, std::size_t stride, const Mat2& u,
                        std::uint64_t ctrl_mask);

    /// sum_i conj(a_i) * b_i
    cplx (*inner)(std::span<const cplx> a, std::span<const cplx> b);

    /// sum_i |a_i|^2
    double (*norm2)(std::span<const cplx> a);

    /// sum_i a_i * b_i (no conjugation)
    cplx (*dot)(std::span<const cplx> a, std::span<const cplx> b);

    /// out_j = sum_i v_i * t[i * out.size() + j]; t is v.size() x out.size(), row-major.
    void (*vecmat)(std::span<const cplx> v, std::span<const cplx> t, std::span<cplx> out);
};

const KernelSet& scalar();

/// nullptr when the variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelSet* avx2();

/// The process-wide selection.
const KernelSet& active();

/// Forces a variant by name ("scalar", "avx2", "auto"). Returns false and
/// leaves the selection unchanged if the name is unknown or unsupported.
bool select(std::string_view name);

} // namespace qunip::kernels
