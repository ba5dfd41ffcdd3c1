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

#include "oracles.hpp"
#include "qunip/bench.hpp"
#include "qunip/config.hpp"
#include "qunip/errors.hpp"
#include "qunip/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace qunip;
using io::json;

TEST_CASE("state dump round trip is bit-exact") {
    std::mt19937_64 rng(1);
    for (int d = 1; d <= 6; ++d) {
        const PureState s(d, oracle::random_vector(std::size_t{1} << d, rng));
        const std::string text = io::to_json(s).dump();
        const PureState back = io::state_from_json(io::parse_json(text, "state"));
        REQUIRE(back.num_qubits() == d);
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            CHECK(back[i] == s[i]);
        }
    }
    const json j = io::to_json(basis_state(2, 1));
    CHECK(j.at("d") == 2);
    CHECK(j.at("amps").size() == 4);
    CHECK(j.at("amps")[1] == json::array({1.0, 0.0}));
}

TEST_CASE("state dump rejects bad input") {
    CHECK_THROWS_AS(io::state_from_json(json{{"d", 1}}), ParseError);
    CHECK_THROWS_AS(io::state_from_json(json{{"d", 1}, {"amps", {{1.0}, {0.0, 0.0}}}}),
                    ParseError);
    CHECK_THROWS_AS(io::state_from_json(json{{"d", 1}, {"amps", {{1.0, 0.0}, {1.0, 0.0}}}}),
                    ValidationError);
    CHECK_THROWS_AS(io::state_from_json(json{{"d", 2}, {"amps", {{1.0, 0.0}, {0.0, 0.0}}}}),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_json("{not json", "state"), ParseError);
    set_max_qubits(3);
    CHECK_THROWS_AS(io::state_from_json(io::to_json(PureState(4, std::vector<Amplitude>(16, 0.25)))),
                    CapacityError);
    set_max_qubits(kDefaultMaxQubits);
}

TEST_CASE("factorization report round trip") {
    const FactorizationReport p = factor_product(tensor(basis_state(1, 1), PureState(1, {0.6, 0.8})));
    const json j = io::to_json(p);
    CHECK(j.at("is_product") == true);
    CHECK(j.at("ranks") == json::array({1}));
    CHECK(j.at("factors").size() == 2);
    CHECK(j.at("factors")[1].size() == 4);
    const FactorizationReport back = io::report_from_json(io::parse_json(j.dump(), "report"));
    CHECK(back.is_product);
    CHECK(back.residual == p.residual);
    REQUIRE(back.factors.has_value());
    CHECK((*back.factors)[1].second == (*p.factors)[1].second);

    const double h = std::sqrt(0.5);
    const FactorizationReport e = factor_product(PureState(2, {h, 0, 0, h}));
    CHECK(io::to_json(e).at("factors").is_null());
    CHECK_FALSE(io::report_from_json(io::to_json(e)).factors.has_value());
}

TEST_CASE("audited run layout") {
    const AuditedRun run = bernstein_vazirani(2, 0b10).run;
    const json j = io::to_json(run);
    CHECK(j.at("oracle_calls") == 1);
    CHECK(j.at("prep_steps") == 0);
    REQUIRE(j.at("steps").size() == 3);
    for (const json& step : j.at("steps")) {
        CHECK(step.at("label").is_string());
        CHECK(step.at("state").at("d") == 2);
        CHECK(step.at("audit").at("is_product") == true);
    }
}

TEST_CASE("lattice round trip") {
    const std::vector<std::size_t> slits{2, 3, 1};
    const SlitLattice l = random_lattice(slits, 4);
    const json j = io::to_json(l);
    CHECK(j.at("slits") == json::array({2, 3, 1}));
    CHECK(j.at("transfers").size() == 2);
    CHECK(j.at("transfers")[0].size() == 2);
    CHECK(j.at("transfers")[0][0].size() == 3);
    const SlitLattice back = io::lattice_from_json(io::parse_json(j.dump(), "lattice"));
    CHECK(amplitude_imbedded(back).amplitude == amplitude_imbedded(l).amplitude);

    const SlitLattice one = io::lattice_from_json(
        io::parse_json(R"({"slits":[1],"source":[[0.6,0]],"transfers":[],"detector":[[0,1]]})", "l"));
    CHECK(amplitude_imbedded(one).amplitude == Amplitude(0.0, 0.6));
    CHECK_THROWS_AS(io::lattice_from_json(io::parse_json(R"({"slits":[1]})", "l")), ParseError);
    CHECK_THROWS_AS(io::lattice_from_json(io::parse_json(
                        R"({"slits":[2],"source":[[1,0]],"transfers":[],"detector":[[1,0]]})", "l")),
                    DomainError);
}

TEST_CASE("model round trip") {
    const InterferenceNeuron n = init_neuron(3, 2, 7);
    const json j = io::to_json(n);
    CHECK(j.at("K") == 3);
    CHECK(j.at("m") == 2);
    const InterferenceNeuron back = io::neuron_from_json(io::parse_json(j.dump(), "model"));
    const std::vector<double> u{0.3, -1.2};
    CHECK(predict(back, u) == predict(n, u));
    json bad = j;
    bad["K"] = 4;
    CHECK_THROWS_AS(io::neuron_from_json(bad), ParseError);
    bad = j;
    bad["w"] = json::array({{1.0}, {1.0}, {1.0}});
    CHECK_THROWS_AS(io::neuron_from_json(bad), ValidationError);
}

TEST_CASE("truth table file") {
    const TruthTable t = io::parse_truth_table("0110\n");
    CHECK(t.num_inputs() == 2);
    CHECK(t(1) == 1);
    CHECK(t(3) == 0);
    CHECK(io::format_truth_table(t) == "0110\n");
    CHECK(io::parse_truth_table("# comment\n  01  \n").num_inputs() == 1);
    CHECK_THROWS_AS(io::parse_truth_table("011"), ParseError);
    CHECK_THROWS_AS(io::parse_truth_table("0"), ParseError);
    CHECK_THROWS_AS(io::parse_truth_table("0120"), ParseError);
    CHECK_THROWS_AS(io::parse_truth_table("01\n10\n"), ParseError);
    CHECK_THROWS_AS(io::parse_truth_table(""), ParseError);
}

TEST_CASE("pattern file") {
    const PatternSet p = io::parse_patterns("101 1\n000 0\n\n");
    CHECK(p.num_inputs() == 3);
    REQUIRE(p.size() == 2);
    CHECK(p.pairs()[0] == PatternSet::Pair{5, 1});
    CHECK(io::format_patterns(p) == "101 1\n000 0\n");
    CHECK(io::parse_patterns(io::format_patterns(p)).pairs()[1] == p.pairs()[1]);
    CHECK_THROWS_AS(io::parse_patterns("101\n"), ParseError);
    CHECK_THROWS_AS(io::parse_patterns("101 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_patterns("101 1\n10 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_patterns("1x1 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_patterns(""), ParseError);
    CHECK_THROWS_AS(io::parse_patterns("101 1\n101 0\n"), DomainError);
}

TEST_CASE("training CSV") {
    const TrainingSet t = io::parse_training_csv("u1,u2,y\n0.5,1,0.25\n-1,2e-3,1\n");
    CHECK(t.inputs == 2);
    REQUIRE(t.samples.size() == 2);
    CHECK(t.samples[1].u[1] == 2e-3);
    CHECK(t.samples[0].y == 0.25);
    const TrainingSet back = io::parse_training_csv(io::format_training_csv(t));
    CHECK(back.samples[1].u == t.samples[1].u);
    CHECK(io::parse_training_csv("y\n0.5\n").inputs == 0);
    CHECK_THROWS_AS(io::parse_training_csv(""), ParseError);
    CHECK_THROWS_AS(io::parse_training_csv("u,y\n"), ParseError);
    CHECK_THROWS_AS(io::parse_training_csv("u,y\n1,2,3\n"), ParseError);
    CHECK_THROWS_AS(io::parse_training_csv("u,y\n1,abc\n"), ParseError);
    // header is mandatory: a numeric first line is taken as the header
    CHECK_THROWS_AS(io::parse_training_csv("1,2\n"), ParseError);
}

TEST_CASE("format_double round-trips") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g(0.0, 1e3);
    for (int i = 0; i < 1000; ++i) {
        const double v = g(rng);
        CHECK(std::strtod(io::format_double(v).c_str(), nullptr) == v);
    }
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("bench CSV round trip") {
    BenchSpec spec;
    spec.b_values = {1, 2, 3};
    spec.n = 2;
    spec.compare = true;
    spec.timing = false;
    const auto rows = bench_sweep(spec);
    const std::string text = format_bench_csv(rows);
    CHECK(text.rfind(std::string(kBenchCsvHeader) + "\n", 0) == 0);
    const auto back = parse_bench_csv(text);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].b == rows[i].b);
        CHECK(back[i].method == rows[i].method);
        CHECK(back[i].multiply_adds == rows[i].multiply_adds);
        CHECK(back[i].paths == rows[i].paths);
        CHECK(back[i].amplitude == rows[i].amplitude);
    }
    CHECK(format_bench_csv(back) == text);
    CHECK_THROWS_AS(parse_bench_csv("b,N\n"), ParseError);
    CHECK_THROWS_AS(parse_bench_csv(std::string(kBenchCsvHeader) + "\n1,2,magic,1,,0,0,0\n"),
                    ParseError);
}

TEST_CASE("file helpers") {
    const std::string path = "qunip_io_test.tmp";
    io::write_file(path, "hello\n");
    CHECK(io::read_file(path) == "hello\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file"), ParseError);
    CHECK_THROWS_AS(io::write_file("/nonexistent/dir/file", "x"), Error);
}
