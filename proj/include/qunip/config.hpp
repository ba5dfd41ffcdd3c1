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

#pragma once

#include <string_view>

namespace qunip {

inline constexpr int kDefaultMaxQubits = 24;
/// Absolute ceiling; basis labels are 64-bit and the dense vector must fit
/// in addressable memory.
inline constexpr int kHardMaxQubits = 40;

/// Current qubit capacity. Initialized from QUNIP_MAX_QUBITS on first use,
/// falling back to kDefaultMaxQubits.
int max_qubits();

/// Overrides the capacity for the rest of the process (clamped to
/// [1, kHardMaxQubits]).
void set_max_qubits(int cap);

/// Throws CapacityError naming `op` unless 1 <= d <= max_qubits().
void check_qubit_capacity(int d, std::string_view op);

} // namespace qunip
