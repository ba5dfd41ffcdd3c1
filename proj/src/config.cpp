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

#include "qunip/config.hpp"

#include "qunip/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace qunip {

namespace {

int initial_cap() {
    const char* env = std::getenv("QUNIP_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxQubits;
    }
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
        return kDefaultMaxQubits;
    }
    return std::min(value, kHardMaxQubits);
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{initial_cap()};
    return cap;
}

} // namespace

int max_qubits() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_qubits(int cap) {
    cap_storage().store(std::clamp(cap, 1, kHardMaxQubits), std::memory_order_relaxed);
}

void check_qubit_capacity(int d, std::string_view op) {
    if (d < 1 || d > max_qubits()) {
        throw CapacityError(std::string(op) + ": " + std::to_string(d) +
                            " qubits outside capacity [1, " + std::to_string(max_qubits()) + "]");
    }
}

} // namespace qunip
