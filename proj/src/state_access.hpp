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

#include "qunip/statevec.hpp"

#include <utility>

namespace qunip::detail {

// Builds states from the output of norm-preserving operations without the
// O(2^d) validation pass. Debug builds still recheck.
struct StateAccess {
    static PureState adopt(int num_qubits, std::vector<Amplitude> amps) {
        return PureState(PureState::Trusted{}, num_qubits, std::move(amps));
    }
    static std::vector<Amplitude> take(PureState&& s) { return std::move(s.amps_); }
};

} // namespace qunip::detail
