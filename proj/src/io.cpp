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

#include "qunip/io.hpp"

#include "qunip/config.hpp"
#include "qunip/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qunip::io {

namespace {

// Runs a loader, turning nlohmann access errors into ParseError.
template <typename F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::vector<Amplitude> amplitudes_from_json(const json& j) {
    std::vector<Amplitude> out;
    out.reserve(j.size());
    for (const json& z : j) {
        out.push_back(amplitude_from_json(z));
    }
    return out;
}

json amplitudes_to_json(std::span<const Amplitude> v) {
    json arr = json::array();
    for (const Amplitude& z : v) {
        arr.push_back(to_json(z));
    }
    return arr;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view s, std::size_t line) {
    s = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("training CSV line " + std::to_string(line) + ": '" + std::string(s) +
                         "' is not a number");
    }
    return v;
}

} // namespace

json to_json(Amplitude z) { return json::array({z.real(), z.imag()}); }

Amplitude amplitude_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("amplitude: expected [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const PureState& s) {
    return json{{"d", s.num_qubits()}, {"amps", amplitudes_to_json(s.amplitudes())}};
}

PureState state_from_json(const json& j) {
    return guarded("state dump", [&] {
        const int d = j.at("d").get<int>();
        check_qubit_capacity(d, "state dump");
        return PureState(d, amplitudes_from_json(j.at("amps")));
    });
}

json to_json(const FactorizationReport& r) {
    json factors = nullptr;
    if (r.factors) {
        factors = json::array();
        for (const auto& [a, b] : *r.factors) {
            factors.push_back(json::array({a.real(), a.imag(), b.real(), b.imag()}));
        }
    }
    return json{{"is_product", r.is_product},
                {"ranks", r.prefix_schmidt_ranks},
                {"residual", r.residual},
                {"factors", factors}};
}

FactorizationReport report_from_json(const json& j) {
    return guarded("factorization report", [&] {
        FactorizationReport r;
        r.is_product = j.at("is_product").get<bool>();
        r.prefix_schmidt_ranks = j.at("ranks").get<std::vector<int>>();
        r.residual = j.at("residual").get<double>();
        const json& f = j.at("factors");
        if (!f.is_null()) {
            std::vector<QubitFactor> factors;
            for (const json& q : f) {
                const auto v = q.get<std::vector<double>>();
                if (v.size() != 4) {
                    throw ParseError("factorization report: factor needs 4 numbers");
                }
                factors.emplace_back(Amplitude{v[0], v[1]}, Amplitude{v[2], v[3]});
            }
            r.factors = std::move(factors);
        }
        return r;
    });
}

json to_json(const AuditedRun& run) {
    json steps = json::array();
    for (std::size_t i = 0; i < run.trace.steps.size(); ++i) {
        json step{{"label", run.trace.steps[i].label}, {"state", to_json(run.trace.steps[i].state)}};
        step["audit"] = i < run.audits.size() ? to_json(run.audits[i]) : json(nullptr);
        steps.push_back(std::move(step));
    }
    return json{{"steps", std::move(steps)},
                {"prep_steps", run.trace.prep_step_count},
                {"oracle_calls", run.trace.oracle_calls}};
}

json to_json(const Distribution& d) {
    json out = json::object();
    for (const auto& [k, v] : d) {
        out[k] = v;
    }
    return out;
}

json to_json(const SlitLattice& l) {
    json transfers = json::array();
    const auto slits = l.slits();
    for (std::size_t k = 1; k < l.barriers(); ++k) {
        const auto t = l.transfer(k);
        json m = json::array();
        for (std::size_t i = 0; i < slits[k - 1]; ++i) {
            m.push_back(amplitudes_to_json(t.subspan(i * slits[k], slits[k])));
        }
        transfers.push_back(std::move(m));
    }
    return json{{"slits", std::vector<std::size_t>(slits.begin(), slits.end())},
                {"source", amplitudes_to_json(l.source())},
                {"transfers", std::move(transfers)},
                {"detector", amplitudes_to_json(l.detector())}};
}

SlitLattice lattice_from_json(const json& j) {
    return guarded("lattice", [&] {
        std::vector<SlitLattice::Matrix> transfers;
        for (const json& m : j.at("transfers")) {
            SlitLattice::Matrix rows;
            for (const json& row : m) {
                rows.push_back(amplitudes_from_json(row));
            }
            transfers.push_back(std::move(rows));
        }
        return SlitLattice(j.at("slits").get<std::vector<std::size_t>>(),
                           amplitudes_from_json(j.at("source")), transfers,
                           amplitudes_from_json(j.at("detector")));
    });
}

json to_json(const InterferenceNeuron& n) {
    return json{{"K", n.paths()},
                {"m", n.inputs},
                {"c", amplitudes_to_json(n.path_weights)},
                {"w", n.phase_weights},
                {"phi", n.phase_bias}};
}

InterferenceNeuron neuron_from_json(const json& j) {
    return guarded("model", [&] {
        InterferenceNeuron n;
        n.inputs = j.at("m").get<std::size_t>();
        n.path_weights = amplitudes_from_json(j.at("c"));
        n.phase_weights = j.at("w").get<std::vector<std::vector<double>>>();
        n.phase_bias = j.at("phi").get<std::vector<double>>();
        if (j.at("K").get<std::size_t>() != n.paths()) {
            throw ParseError("model: K = " + j.at("K").dump() + " but " +
                             std::to_string(n.paths()) + " path weights");
        }
        n.validate();
        return n;
    });
}

std::string format_truth_table(const TruthTable& t) {
    std::string s;
    s.reserve(t.values().size() + 1);
    for (Bit b : t.values()) {
        s.push_back(static_cast<char>('0' + b));
    }
    s.push_back('\n');
    return s;
}

TruthTable parse_truth_table(std::string_view text) {
    std::string_view line;
    for (std::string_view l : split_lines(text)) {
        l = trim(l);
        if (l.empty() || l.front() == '#') {
            continue;
        }
        if (!line.empty()) {
            throw ParseError("truth table: more than one data line");
        }
        line = l;
    }
    if (line.size() < 2 || !std::has_single_bit(line.size())) {
        throw ParseError("truth table: length " + std::to_string(line.size()) +
                         " is not 2^d with d >= 1");
    }
    std::vector<Bit> values;
    for (char c : line) {
        if (c != '0' && c != '1') {
            throw ParseError(std::string("truth table: unexpected character '") + c + "'");
        }
        values.push_back(static_cast<Bit>(c - '0'));
    }
    const int d = std::countr_zero(line.size());
    return TruthTable(d, std::move(values));
}

std::string format_patterns(const PatternSet& p) {
    std::string s;
    for (const auto& [x, b] : p.pairs()) {
        s += to_bitstring(x, p.num_inputs());
        s += ' ';
        s += static_cast<char>('0' + b);
        s += '\n';
    }
    return s;
}

PatternSet parse_patterns(std::string_view text) {
    int d = 0;
    std::vector<PatternSet::Pair> pairs;
    std::size_t lineno = 0;
    for (std::string_view l : split_lines(text)) {
        ++lineno;
        l = trim(l);
        if (l.empty() || l.front() == '#') {
            continue;
        }
        const std::size_t sp = l.find_first_of(" \t");
        if (sp == std::string_view::npos) {
            throw ParseError("pattern file line " + std::to_string(lineno) +
                             ": expected 'bitstring bit'");
        }
        const std::string_view bits = l.substr(0, sp);
        const std::string_view val = trim(l.substr(sp + 1));
        if (val != "0" && val != "1") {
            throw ParseError("pattern file line " + std::to_string(lineno) + ": value '" +
                             std::string(val) + "' is not a bit");
        }
        if (d == 0) {
            d = static_cast<int>(bits.size());
        } else if (static_cast<int>(bits.size()) != d) {
            throw ParseError("pattern file line " + std::to_string(lineno) +
                             ": argument width differs from first line");
        }
        BasisLabel x = 0;
        try {
            x = parse_bitstring(bits);
        } catch (const DomainError& e) {
            throw ParseError("pattern file line " + std::to_string(lineno) + ": " + e.what());
        }
        pairs.emplace_back(x, static_cast<Bit>(val[0] - '0'));
    }
    if (pairs.empty()) {
        throw ParseError("pattern file: no patterns");
    }
    return PatternSet(d, std::move(pairs));
}

std::string format_training_csv(const TrainingSet& t) {
    std::string s;
    for (std::size_t j = 0; j < t.inputs; ++j) {
        s += "u" + std::to_string(j + 1) + ",";
    }
    s += "y\n";
    for (const Sample& smp : t.samples) {
        for (double u : smp.u) {
            s += format_double(u) + ",";
        }
        s += format_double(smp.y) + "\n";
    }
    return s;
}

TrainingSet parse_training_csv(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) {
        ++i;
    }
    if (i == lines.size()) {
        throw ParseError("training CSV: missing header");
    }
    const std::string_view header = lines[i++];
    const std::size_t columns =
        static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
    TrainingSet t;
    t.inputs = columns - 1;
    for (; i < lines.size(); ++i) {
        std::string_view l = trim(lines[i]);
        if (l.empty()) {
            continue;
        }
        std::vector<double> row;
        while (true) {
            const std::size_t comma = l.find(',');
            row.push_back(parse_number(l.substr(0, comma), i + 1));
            if (comma == std::string_view::npos) {
                break;
            }
            l.remove_prefix(comma + 1);
        }
        if (row.size() != columns) {
            throw ParseError("training CSV line " + std::to_string(i + 1) + ": " +
                             std::to_string(row.size()) + " fields, header has " +
                             std::to_string(columns));
        }
        const double y = row.back();
        row.pop_back();
        t.samples.push_back({std::move(row), y});
    }
    if (t.samples.empty()) {
        throw ParseError("training CSV: no data rows");
    }
    return t;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

json parse_json(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace qunip::io
