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

// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher
// has checked CPUID.

#include "qunip/kernels.hpp"

#include <immintrin.h>

namespace qunip::kernels {

namespace {

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d broadcast(cplx c) { return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag()); }

// Lane-wise complex product.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void apply_pairs(std::span<cplx> amps, std::size_t stride, const Mat2& u,
                 std::uint64_t ctrl_mask) {
    const std::size_t n = amps.size();
    cplx* a = amps.data();
    if (stride == 1) {
        // Both members of the pair share a register.
        const __m256d col0 = _mm256_setr_pd(u.m00.real(), u.m00.imag(), u.m10.real(), u.m10.imag());
        const __m256d col1 = _mm256_setr_pd(u.m01.real(), u.m01.imag(), u.m11.real(), u.m11.imag());
        for (std::size_t i = 0; i < n; i += 2) {
            if ((i & ctrl_mask) != ctrl_mask) {
                continue;
            }
            const __m256d v = load2(a + i);
            const __m256d xx = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d yy = _mm256_permute2f128_pd(v, v, 0x11);
            store2(a + i, _mm256_add_pd(cmul(xx, col0), cmul(yy, col1)));
        }
        return;
    }
    if ((ctrl_mask & 1U) != 0) {
        // Neighbouring indices disagree on the control bit.
        scalar().apply_pairs(amps, stride, u, ctrl_mask);
        return;
    }
    const __m256d u00 = broadcast(u.m00);
    const __m256d u01 = broadcast(u.m01);
    const __m256d u10 = broadcast(u.m10);
    const __m256d u11 = broadcast(u.m11);
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            const std::size_t i0 = base + j;
            if ((i0 & ctrl_mask) != ctrl_mask) {
                continue;
            }
            const __m256d x = load2(a + i0);
            const __m256d y = load2(a + i0 + stride);
            store2(a + i0, _mm256_add_pd(cmul(u00, x), cmul(u01, y)));
            store2(a + i0 + stride, _mm256_add_pd(cmul(u10, x), cmul(u11, y)));
        }
    }
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    const std::size_t n = a.size();
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load2(a.data() + i);
        const __m256d vb = load2(b.data() + i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), acc_im);
    }
    // acc_im lanes hold (ar*bi, ai*br); the imaginary part is their difference.
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2(std::span<const cplx> a) {
    const std::size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = load2(a.data() + i);
        const __m256d v1 = load2(a.data() + i + 2);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 2 <= n; i += 2) {
        const __m256d v0 = load2(a.data() + i);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += std::norm(a[i]);
    }
    return acc;
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = _mm256_add_pd(acc, cmul(load2(a.data() + i), load2(b.data() + i)));
    }
    const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    cplx out{_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
    for (; i < n; ++i) {
        out += mul(a[i], b[i]);
    }
    return out;
}

void vecmat(std::span<const cplx> v, std::span<const cplx> t, std::span<cplx> out) {
    const std::size_t cols = out.size();
    cplx* o = out.data();
    for (std::size_t j = 0; j < cols; ++j) {
        o[j] = {0.0, 0.0};
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const __m256d vi = broadcast(v[i]);
        const cplx* row = t.data() + i * cols;
        std::size_t j = 0;
        for (; j + 2 <= cols; j += 2) {
            store2(o + j, _mm256_add_pd(load2(o + j), cmul(load2(row + j), vi)));
        }
        for (; j < cols; ++j) {
            o[j] += mul(v[i], row[j]);
        }
    }
}

constexpr KernelSet kAvx2{"avx2", apply_pairs, inner, norm2, dot, vecmat};

} // namespace

const KernelSet& avx2_table() { return kAvx2; }

} // namespace qunip::kernels
