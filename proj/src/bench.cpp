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

#include "qunip/bench.hpp"

#include "qunip/errors.hpp"
#include "qunip/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

namespace qunip {

namespace {

std::optional<std::uint64_t> power(std::size_t n, std::size_t b) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < b; ++i) {
        if (p > UINT64_MAX / n) {
            return std::nullopt;
        }
        p *= n;
    }
    return p;
}

template <typename T>
T parse_field(std::string_view s, std::size_t line, const char* name) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("bench CSV line " + std::to_string(line) + ": bad " + name + " '" +
                         std::string(s) + "'");
    }
    return v;
}

template <typename F>
std::int64_t timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

} // namespace

SlitLattice bench_lattice(const BenchSpec& spec, std::size_t b) {
    const std::vector<std::size_t> slits(b, spec.n);
    // splitmix-style mixing so neighbouring b get unrelated streams
    std::uint64_t s = spec.seed + 0x9E3779B97F4A7C15ULL * (b + 1);
    s = (s ^ (s >> 30)) * 0xBF58476D1CE4E5B9ULL;
    s = (s ^ (s >> 27)) * 0x94D049BB133111EBULL;
    s ^= s >> 31;
    return random_lattice(slits, s, LegDistribution::Unitary);
}

std::vector<BenchRow> bench_sweep(const BenchSpec& spec) {
    if (spec.n == 0) {
        throw DomainError("bench_sweep: N must be positive");
    }
    for (std::size_t b : spec.b_values) {
        if (b == 0) {
            throw DomainError("bench_sweep: barrier count must be positive");
        }
        if (spec.compare) {
            const auto p = power(spec.n, b);
            if (!p || *p > kPathGuard) {
                throw CapacityError("bench_sweep: brute force at b = " + std::to_string(b) +
                                    ", N = " + std::to_string(spec.n) + " needs " +
                                    std::to_string(spec.n) + "^" + std::to_string(b) +
                                    " paths, over the 1e8 guard");
            }
        }
    }
    std::vector<BenchRow> rows;
    for (std::size_t b : spec.b_values) {
        const SlitLattice lattice = bench_lattice(spec, b);
        PathSumResult r;
        const std::int64_t ns = timed([&] { r = amplitude_imbedded(lattice); });
        rows.push_back({b, spec.n, "imbedded", r.multiply_add_count, power(spec.n, b),
                        spec.timing ? ns : 0, r.amplitude});
        if (spec.compare) {
            PathSumResult brute;
            const std::int64_t bns = timed([&] { brute = amplitude_bruteforce(lattice, spec.threads); });
            rows.push_back({b, spec.n, "bruteforce", brute.multiply_add_count,
                            brute.paths_enumerated, spec.timing ? bns : 0, brute.amplitude});
        }
    }
    return rows;
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
    std::string out(kBenchCsvHeader);
    out += '\n';
    for (const BenchRow& r : rows) {
        out += std::to_string(r.b) + ',' + std::to_string(r.n) + ',' + r.method + ',' +
               std::to_string(r.multiply_adds) + ',' +
               (r.paths ? std::to_string(*r.paths) : std::string()) + ',' +
               std::to_string(r.nanoseconds) + ',' + io::format_double(r.amplitude.real()) + ',' +
               io::format_double(r.amplitude.imag()) + '\n';
    }
    return out;
}

std::vector<BenchRow> parse_bench_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kBenchCsvHeader) {
        throw ParseError("bench CSV: missing or unexpected header");
    }
    std::vector<BenchRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string_view> f;
        std::string_view rest = line;
        while (true) {
            const std::size_t c = rest.find(',');
            f.push_back(rest.substr(0, c));
            if (c == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(c + 1);
        }
        if (f.size() != 8) {
            throw ParseError("bench CSV line " + std::to_string(lineno) + ": expected 8 fields");
        }
        BenchRow r;
        r.b = parse_field<std::size_t>(f[0], lineno, "b");
        r.n = parse_field<std::size_t>(f[1], lineno, "N");
        r.method = std::string(f[2]);
        if (r.method != "imbedded" && r.method != "bruteforce") {
            throw ParseError("bench CSV line " + std::to_string(lineno) + ": unknown method '" +
                             r.method + "'");
        }
        r.multiply_adds = parse_field<std::uint64_t>(f[3], lineno, "multiply_adds");
        if (!f[4].empty()) {
            r.paths = parse_field<std::uint64_t>(f[4], lineno, "paths");
        }
        r.nanoseconds = parse_field<std::int64_t>(f[5], lineno, "nanoseconds");
        r.amplitude = {parse_field<double>(f[6], lineno, "amp_re"),
                       parse_field<double>(f[7], lineno, "amp_im")};
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace qunip
