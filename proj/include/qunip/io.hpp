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
 * File formats.
 *
 *   state dump     {"d": int, "amps": [[re, im], ...]}          basis-label order
 *   report         {"is_product", "ranks", "residual", "factors": [[re,im,re,im],...] | null}
 *   audited run    {"steps": [{"label", "state", "audit"}], "prep_steps", "oracle_calls"}
 *   lattice        {"slits", "source", "transfers", "detector"}  legs as [re, im]
 *   model          {"K", "m", "c": [[re,im],...], "w": [[...],...], "phi": [...]}
 *   truth table    one line of 2^d characters 0/1 in basis order
 *   pattern file   one "bitstring bit" pair per line
 *   training CSV   header, then m feature columns and one target column
 *
 * JSON doubles use the shortest form that round-trips; CSV doubles use
 * %.17g. Either way every dump reloads bit-exactly.
 */
#pragma once

#include "qunip/approximator.hpp"
#include "qunip/boolean.hpp"
#include "qunip/circuits.hpp"
#include "qunip/entanglement.hpp"
#include "qunip/interference.hpp"
#include "qunip/statevec.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace qunip::io {

using json = nlohmann::json;

json to_json(Amplitude z);
Amplitude amplitude_from_json(const json& j);

json to_json(const PureState& s);
PureState state_from_json(const json& j);

json to_json(const FactorizationReport& r);
FactorizationReport report_from_json(const json& j);

json to_json(const AuditedRun& run);

json to_json(const Distribution& d);

json to_json(const SlitLattice& l);
SlitLattice lattice_from_json(const json& j);

json to_json(const InterferenceNeuron& n);
InterferenceNeuron neuron_from_json(const json& j);

std::string format_truth_table(const TruthTable& t);
TruthTable parse_truth_table(std::string_view text);

std::string format_patterns(const PatternSet& p);
PatternSet parse_patterns(std::string_view text);

std::string format_training_csv(const TrainingSet& t);
TrainingSet parse_training_csv(std::string_view text);

/// %.17g
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Parses JSON text, converting parser failures into ParseError.
json parse_json(std::string_view text, std::string_view what);

} // namespace qunip::io
