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

#include <atomic>
#include <cstdlib>

namespace qunip::kernels {

#if defined(QUNIP_HAVE_AVX2)
const KernelSet& avx2_table();
#endif

namespace {

[[maybe_unused]] bool cpu_has_avx2() {
#if defined(QUNIP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelSet* best() {
    if (const KernelSet* k = avx2()) {
        return k;
    }
    return &scalar();
}

const KernelSet* from_name(std::string_view name) {
    if (name == "scalar") {
        return &scalar();
    }
    if (name == "avx2") {
        return avx2();
    }
    if (name == "auto") {
        return best();
    }
    return nullptr;
}

std::atomic<const KernelSet*>& selection() {
    static std::atomic<const KernelSet*> sel{[] {
        const char* env = std::getenv("QUNIP_KERNELS");
        if (env != nullptr) {
            if (const KernelSet* k = from_name(env)) {
                return k;
            }
        }
        return best();
    }()};
    return sel;
}

} // namespace

const KernelSet* avx2() {
#if defined(QUNIP_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet& active() { return *selection().load(std::memory_order_acquire); }

bool select(std::string_view name) {
    const KernelSet* k = from_name(name);
    if (k == nullptr) {
        return false;
    }
    selection().store(k, std::memory_order_release);
    return true;
}

} // namespace qunip::kernels
