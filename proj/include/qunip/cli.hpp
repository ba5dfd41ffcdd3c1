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
 * Command-line front end. parse_args turns argv into a fully validated
 * CommandPlan; execute runs it. Exit codes: 0 success, 1 runtime error
 * (capacity, divergence, unreadable input), 2 usage error.
 */
#pragma once

#include "qunip/bench.hpp"
#include "qunip/errors.hpp"
#include "qunip/statevec.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qunip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Argument combination rejected after parsing (e.g. --a wider than the table).
class UsageError : public Error {
  public:
    using Error::Error;
};

enum class Format { Json, Csv };

struct BvArgs {
    int d = 0;
    BasisLabel a = 0;
};

struct DjArgs {
    std::string table;
};

struct GroverArgs {
    int d = 0;
    BasisLabel marked = 0;
    std::uint64_t iterations = 0;
};

struct DbArgs {
    std::string table;
    std::string a_bits;
    std::optional<std::string> patterns;
    std::optional<std::string> patterns_out;
};

struct EntangleArgs {
    std::string state;
    double tol = 1e-8;
};

struct InterfereArgs {
    std::string lattice;
    bool bruteforce = false;
};

struct BenchArgs {
    BenchSpec spec;
    std::optional<std::string> lattice_out;
};

struct FitArgs {
    std::string data;
    std::size_t k = 0;
    double lr = 0.05;
    std::size_t epochs = 2000;
    std::uint64_t seed = 0;
    std::optional<int> d_equiv;
    std::optional<std::string> model_out;
};

using Params = std::variant<BvArgs, DjArgs, GroverArgs, DbArgs, EntangleArgs, InterfereArgs,
                            BenchArgs, FitArgs>;

struct CommandPlan {
    std::string subcommand;
    Params params;
    std::optional<std::string> output_path;
    Format format = Format::Json;
    bool meta = true;
    unsigned threads = 1;
    /// Sampled readout in addition to the exact distribution.
    std::optional<std::uint64_t> shots;
    std::uint64_t shots_seed = 0;
    /// Final state dump for bv, dj, grover and db.
    std::optional<std::string> state_out;
};

/// Parsing stopped without a plan: --help (code 0, text for stdout) or a
/// usage error (code 2, text for stderr).
struct ParseExit {
    int code;
    std::string text;
};

std::variant<CommandPlan, ParseExit> parse_args(const std::vector<std::string>& args);

int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err);

/// parse_args + execute; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qunip::cli
