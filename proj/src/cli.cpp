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

#include "qunip/cli.hpp"

#include "qunip/approximator.hpp"
#include "qunip/boolean.hpp"
#include "qunip/circuits.hpp"
#include "qunip/entanglement.hpp"
#include "qunip/interference.hpp"
#include "qunip/io.hpp"
#include "qunip/kernels.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace qunip::cli {

namespace {

using io::json;

constexpr const char* kVersion = "1.0.0";

// "1,2,5..7" -> {1,2,5,6,7}
std::vector<std::size_t> parse_b_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t dots = item.find("..");
        try {
            std::size_t pos = 0;
            if (dots == std::string::npos) {
                out.push_back(std::stoull(item, &pos));
                if (pos != item.size()) {
                    throw std::invalid_argument(item);
                }
            } else {
                const std::size_t lo = std::stoull(item.substr(0, dots));
                const std::size_t hi = std::stoull(item.substr(dots + 2));
                if (lo > hi) {
                    throw std::invalid_argument(item);
                }
                for (std::size_t b = lo; b <= hi; ++b) {
                    out.push_back(b);
                }
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError("--b", "'" + item + "' is not a barrier count or range");
        }
    }
    if (out.empty()) {
        throw CLI::ValidationError("--b", "empty barrier list");
    }
    for (std::size_t b : out) {
        if (b == 0) {
            throw CLI::ValidationError("--b", "barrier counts must be positive");
        }
    }
    return out;
}

BasisLabel checked_bits(const std::string& bits, int d, const char* flag) {
    if (static_cast<int>(bits.size()) != d) {
        throw CLI::ValidationError(flag, "'" + bits + "' must be a " + std::to_string(d) +
                                             "-bit string");
    }
    try {
        return parse_bitstring(bits);
    } catch (const DomainError&) {
        throw CLI::ValidationError(flag, "'" + bits + "' is not a bitstring");
    }
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json sample_shots(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
    std::vector<std::string> keys;
    std::vector<double> weights;
    for (const auto& [k, p] : dist) {
        keys.push_back(k);
        weights.push_back(p);
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::vector<std::uint64_t> counts(keys.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++counts[pick(rng)];
    }
    json out = json::object();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (counts[i] > 0) {
            out[keys[i]] = counts[i];
        }
    }
    return out;
}

std::string distribution_csv(const Distribution& dist) {
    std::string s = "outcome,probability\n";
    for (const auto& [k, p] : dist) {
        s += k + "," + io::format_double(p) + "\n";
    }
    return s;
}

// Output of one subcommand: JSON document, CSV text, and the final state
// when the subcommand has one.
struct Output {
    json doc;
    std::string csv;
    std::optional<PureState> final_state;
};

void add_shots(const CommandPlan& plan, json& doc, const Distribution& dist) {
    if (plan.shots) {
        doc["shots"] = {{"count", *plan.shots},
                        {"seed", plan.shots_seed},
                        {"counts", sample_shots(dist, *plan.shots, plan.shots_seed)}};
    }
}

Output run_bv(const CommandPlan& plan, const BvArgs& a) {
    BvResult r = bernstein_vazirani(a.d, a.a);
    json doc{{"command", "bv"},
             {"d", a.d},
             {"a", to_bitstring(a.a, a.d)},
             {"recovered", to_bitstring(r.recovered, a.d)},
             {"recovered_probability", r.recovered_probability},
             {"oracle_calls", r.run.trace.oracle_calls},
             {"distribution", io::to_json(r.distribution)},
             {"run", io::to_json(r.run)}};
    add_shots(plan, doc, r.distribution);
    return {std::move(doc), distribution_csv(r.distribution), r.run.trace.steps.back().state};
}

Output run_dj(const CommandPlan& plan, const DjArgs& a) {
    const TruthTable t = io::parse_truth_table(io::read_file(a.table));
    DjResult r = deutsch_jozsa(t);
    const PureState& fin = r.run.trace.steps.back().state;
    std::vector<int> all(static_cast<std::size_t>(t.num_inputs()));
    std::iota(all.begin(), all.end(), 1);
    const Distribution dist = measure_distribution(fin, all);
    json doc{{"command", "dj"},
             {"d", t.num_inputs()},
             {"classification", to_string(classify(t))},
             {"verdict", to_string(r.verdict)},
             {"zero_probability", r.zero_probability},
             {"oracle_calls", r.run.trace.oracle_calls},
             {"distribution", io::to_json(dist)},
             {"run", io::to_json(r.run)}};
    add_shots(plan, doc, dist);
    return {std::move(doc), distribution_csv(dist), fin};
}

Output run_grover(const CommandPlan& plan, const GroverArgs& a) {
    GroverResult r = grover(a.d, a.marked, a.iterations);
    const PureState& fin = r.run.trace.steps.back().state;
    std::vector<int> all(static_cast<std::size_t>(a.d));
    std::iota(all.begin(), all.end(), 1);
    const Distribution dist = measure_distribution(fin, all);
    json doc{{"command", "grover"},
             {"d", a.d},
             {"marked", to_bitstring(a.marked, a.d)},
             {"iterations", a.iterations},
             {"success_probability", r.success_probability},
             {"analytic", grover_success_analytic(a.d, a.iterations)},
             {"oracle_calls", r.run.trace.oracle_calls},
             {"distribution", io::to_json(dist)},
             {"run", io::to_json(r.run)}};
    if (a.d == 2 && a.iterations >= 1) {
        doc["post_oracle_tangle"] = two_qubit_tangle(r.run.trace.steps[1].state);
    }
    add_shots(plan, doc, dist);
    return {std::move(doc), distribution_csv(dist), fin};
}

Output run_db(const CommandPlan& plan, const DbArgs& a) {
    const TruthTable t = io::parse_truth_table(io::read_file(a.table));
    const int d = t.num_inputs();
    if (static_cast<int>(a.a_bits.size()) != d) {
        throw UsageError("--a: '" + a.a_bits + "' must be a " + std::to_string(d) +
                         "-bit string to match the table");
    }
    const BasisLabel stim = parse_bitstring(a.a_bits);
    if (a.patterns_out) {
        io::write_file(*a.patterns_out, io::format_patterns(full_pattern_set(t)));
    }
    std::optional<PatternSet> patterns;
    std::size_t disagreements = 0;
    if (a.patterns) {
        patterns = io::parse_patterns(io::read_file(*a.patterns));
        if (patterns->num_inputs() != d) {
            throw UsageError("--patterns: " + std::to_string(patterns->num_inputs()) +
                             "-bit arguments do not match the " + std::to_string(d) +
                             "-input table");
        }
        for (const auto& [x, b] : patterns->pairs()) {
            disagreements += (t(x) != b) ? 1 : 0;
        }
    }
    LookupResult r = patterns ? figure1_pipeline(*patterns, stim) : figure1_pipeline(t, stim);
    json doc{{"command", "db"},
             {"d", d},
             {"a", a.a_bits},
             {"table_value_at_a", t(stim)},
             {"prep_steps", r.run.trace.prep_step_count},
             {"oracle_calls", r.run.trace.oracle_calls},
             {"first_register", io::to_json(r.first_register)},
             {"conditional_b", r.conditional_b ? io::to_json(*r.conditional_b) : json(nullptr)},
             {"conditioning_failed", r.conditioning_failed},
             {"target_fidelity", fidelity(r.final_state, lookup_target_state(d, stim, t(stim)))},
             {"final_state", io::to_json(r.final_state)},
             {"run", io::to_json(r.run)}};
    if (patterns) {
        doc["patterns"] = patterns->size();
        doc["pattern_disagreements"] = disagreements;
    }
    add_shots(plan, doc, r.first_register);
    return {std::move(doc), distribution_csv(r.first_register), r.final_state};
}

Output run_entangle(const EntangleArgs& a) {
    const PureState s = io::state_from_json(io::parse_json(io::read_file(a.state), "state dump"));
    const FactorizationReport rep = factor_product(s, a.tol);
    json doc{{"command", "entangle"},
             {"d", s.num_qubits()},
             {"tol", a.tol},
             {"report", io::to_json(rep)},
             {"description_length",
              {{"general", description_length(s.num_qubits(), false)},
               {"product", description_length(s.num_qubits(), true)}}}};
    if (s.num_qubits() == 2) {
        doc["tangle"] = two_qubit_tangle(s);
    }
    std::string csv = "cut,rank\n";
    for (std::size_t k = 0; k < rep.prefix_schmidt_ranks.size(); ++k) {
        csv += std::to_string(k + 1) + "," + std::to_string(rep.prefix_schmidt_ranks[k]) + "\n";
    }
    return {std::move(doc), std::move(csv), std::nullopt};
}

Output run_interfere(const CommandPlan& plan, const InterfereArgs& a) {
    const SlitLattice l = io::lattice_from_json(io::parse_json(io::read_file(a.lattice), "lattice"));
    const PathSumResult imb = amplitude_imbedded(l);
    const ParameterCount pc = parameter_count(l);
    const auto paths = path_count(l);
    json doc{{"command", "interfere"},
             {"barriers", l.barriers()},
             {"slits", std::vector<std::size_t>(l.slits().begin(), l.slits().end())},
             {"imbedded",
              {{"amplitude", io::to_json(imb.amplitude)},
               {"intensity", std::norm(imb.amplitude)},
               {"multiply_adds", imb.multiply_add_count}}},
             {"paths", paths ? json(*paths) : json(nullptr)},
             {"log10_paths", log10_path_count(l)},
             {"parameters", {{"family_size", pc.family_size}, {"leg_count", pc.leg_count}}}};
    std::string csv = "method,multiply_adds,paths,amp_re,amp_im,intensity\n";
    const std::string paths_field = paths ? std::to_string(*paths) : std::string();
    csv += "imbedded," + std::to_string(imb.multiply_add_count) + "," + paths_field + "," +
           io::format_double(imb.amplitude.real()) + "," + io::format_double(imb.amplitude.imag()) +
           "," + io::format_double(std::norm(imb.amplitude)) + "\n";
    if (a.bruteforce) {
        const PathSumResult br = amplitude_bruteforce(l, plan.threads);
        doc["bruteforce"] = {{"amplitude", io::to_json(br.amplitude)},
                             {"intensity", std::norm(br.amplitude)},
                             {"multiply_adds", br.multiply_add_count},
                             {"paths_enumerated", br.paths_enumerated}};
        doc["difference"] = std::abs(br.amplitude - imb.amplitude);
        csv += "bruteforce," + std::to_string(br.multiply_add_count) + "," +
               std::to_string(br.paths_enumerated) + "," + io::format_double(br.amplitude.real()) +
               "," + io::format_double(br.amplitude.imag()) + "," +
               io::format_double(std::norm(br.amplitude)) + "\n";
    }
    return {std::move(doc), std::move(csv), std::nullopt};
}

Output run_bench(const CommandPlan& plan, const BenchArgs& a) {
    BenchSpec spec = a.spec;
    spec.threads = plan.threads;
    spec.timing = plan.meta;
    const std::vector<BenchRow> rows = bench_sweep(spec);
    if (a.lattice_out) {
        io::write_file(*a.lattice_out, io::to_json(bench_lattice(spec, spec.b_values.back())).dump(2) + "\n");
    }
    json arr = json::array();
    for (const BenchRow& r : rows) {
        arr.push_back({{"b", r.b},
                       {"N", r.n},
                       {"method", r.method},
                       {"multiply_adds", r.multiply_adds},
                       {"paths", r.paths ? json(*r.paths) : json(nullptr)},
                       {"nanoseconds", r.nanoseconds},
                       {"amp_re", r.amplitude.real()},
                       {"amp_im", r.amplitude.imag()}});
    }
    json doc{{"command", "bench"}, {"seed", spec.seed}, {"rows", std::move(arr)}};
    return {std::move(doc), format_bench_csv(rows), std::nullopt};
}

Output run_fit(const FitArgs& a) {
    const TrainingSet t = io::parse_training_csv(io::read_file(a.data));
    const TrainResult r = train(a.k, t, a.lr, a.epochs, a.seed);
    if (a.model_out) {
        io::write_file(*a.model_out, io::to_json(r.fitted).dump(2) + "\n");
    }
    const int d_equiv = a.d_equiv.value_or(std::max<int>(1, static_cast<int>(t.inputs)));
    const ResourceReport res = resource_report(a.k, t.samples.size(), d_equiv);
    json doc{{"command", "fit"},
             {"K", a.k},
             {"m", t.inputs},
             {"P", t.samples.size()},
             {"lr", a.lr},
             {"epochs", a.epochs},
             {"seed", a.seed},
             {"init", "c uniform on disk radius 1/K; w, phi uniform [-1, 1]"},
             {"initial_loss", r.loss_history.front()},
             {"final_loss", r.loss_history.back()},
             {"rmse", std::sqrt(r.loss_history.back())},
             {"loss_history", r.loss_history},
             {"model", io::to_json(r.fitted)},
             {"resources",
              {{"trained_paths", res.trained_paths},
               {"sqrtP_reference", res.sqrt_p_reference},
               {"d_equiv", d_equiv},
               {"exact_realization_units", res.exact_realization_units}}}};
    std::string csv = "epoch,loss\n";
    for (std::size_t e = 0; e < r.loss_history.size(); ++e) {
        csv += std::to_string(e) + "," + io::format_double(r.loss_history[e]) + "\n";
    }
    return {std::move(doc), std::move(csv), std::nullopt};
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::variant<CommandPlan, ParseExit> parse_args(const std::vector<std::string>& args) {
    CLI::App app{"qunip: state-vector circuits, entanglement audits, multi-barrier "
                 "interference and interference-neuron fitting"};
    app.name("qunip");
    app.require_subcommand(1);

    std::string output;
    std::string format;
    bool no_meta = false;
    unsigned threads = 1;
    std::uint64_t shots = 0;
    std::uint64_t shots_seed = 0;
    std::string state_out;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", output, "Write the primary output here instead of stdout");
        sub->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--no-meta", no_meta, "Omit the metadata block (timestamps, timings)");
        sub->add_option("--threads", threads, "Worker threads where supported")
            ->check(CLI::Range(1U, 1024U));
    };
    auto add_shots = [&](CLI::App* sub) {
        sub->add_option("--shots", shots, "Also sample this many measurement shots")
            ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100'000'000}));
        sub->add_option("--shots-seed", shots_seed, "Seed for --shots sampling");
        sub->add_option("--state-out", state_out, "Write the final state dump here");
    };

    BvArgs bv;
    std::string bv_a;
    CLI::App* bv_cmd = app.add_subcommand("bv", "Bernstein-Vazirani single-query search");
    bv_cmd->add_option("--d", bv.d, "Register width")->required()->check(CLI::Range(1, 63));
    bv_cmd->add_option("--a", bv_a, "Hidden string as a d-bit bitstring")->required();
    add_common(bv_cmd);
    add_shots(bv_cmd);

    DjArgs dj;
    CLI::App* dj_cmd = app.add_subcommand("dj", "Deutsch-Jozsa on a truth-table file");
    dj_cmd->add_option("--table", dj.table, "Truth table file")->required();
    add_common(dj_cmd);
    add_shots(dj_cmd);

    GroverArgs gr;
    std::optional<std::uint64_t> gr_iters;
    CLI::App* gr_cmd = app.add_subcommand("grover", "Grover search for one marked label");
    gr_cmd->add_option("--d", gr.d, "Register width")->required()->check(CLI::Range(1, 63));
    gr_cmd->add_option("--marked", gr.marked, "Marked basis label (decimal)")->required();
    gr_cmd->add_option("--iterations", gr_iters, "Default: floor(pi/4 sqrt(2^d))");
    add_common(gr_cmd);
    add_shots(gr_cmd);

    DbArgs db;
    std::string db_patterns;
    std::string db_patterns_out;
    CLI::App* db_cmd = app.add_subcommand("db", "Database preparation + one-query lookup circuit");
    db_cmd->add_option("--table", db.table, "Truth table file")->required();
    db_cmd->add_option("--a", db.a_bits, "Stimulus as a d-bit bitstring")->required();
    db_cmd->add_option("--patterns", db_patterns, "Restrict preparation to this pattern file");
    db_cmd->add_option("--patterns-out", db_patterns_out, "Write the table's full pattern set here");
    add_common(db_cmd);
    add_shots(db_cmd);

    EntangleArgs en;
    CLI::App* en_cmd = app.add_subcommand("entangle", "Factorization report for a state dump");
    en_cmd->add_option("--state", en.state, "State dump (JSON)")->required();
    en_cmd->add_option("--tol", en.tol, "Relative singular-value tolerance")
        ->check(CLI::Range(std::numeric_limits<double>::min(), 0.999999));
    add_common(en_cmd);

    InterfereArgs in;
    CLI::App* in_cmd = app.add_subcommand("interfere", "Detector amplitude of a lattice file");
    in_cmd->add_option("--lattice", in.lattice, "Lattice file (JSON)")->required();
    in_cmd->add_flag("--bruteforce", in.bruteforce, "Also enumerate every path");
    add_common(in_cmd);

    BenchArgs be;
    std::string be_b;
    std::string be_lattice_out;
    CLI::App* be_cmd = app.add_subcommand("bench", "Imbedded vs brute-force scaling sweep");
    be_cmd->add_option("--b", be_b, "Barrier counts, e.g. 1,2,3 or 1..7")->required();
    be_cmd->add_option("--n", be.spec.n, "Slits per barrier")->required()->check(CLI::Range(1, 1 << 16));
    be_cmd->add_flag("--compare", be.spec.compare, "Also run brute force");
    be_cmd->add_option("--seed", be.spec.seed, "Lattice seed");
    be_cmd->add_option("--lattice-out", be_lattice_out, "Write the lattice of the last b here");
    add_common(be_cmd);

    FitArgs fit;
    int fit_d_equiv = 0;
    std::string fit_model_out;
    CLI::App* fit_cmd = app.add_subcommand("fit", "Train an interference neuron on a CSV");
    fit_cmd->add_option("--data", fit.data, "Training CSV (header, m features, target)")->required();
    fit_cmd->add_option("--k", fit.k, "Number of interfering paths")->required()->check(CLI::Range(1, 100000));
    fit_cmd->add_option("--lr", fit.lr, "Learning rate")
        ->check(CLI::Range(std::numeric_limits<double>::min(), 1e6));
    fit_cmd->add_option("--epochs", fit.epochs, "Gradient steps")->check(CLI::Range(1, 100'000'000));
    fit_cmd->add_option("--seed", fit.seed, "Initialization seed");
    fit_cmd->add_option("--d-equiv", fit_d_equiv, "Input bits for the 2^d exact-realization count")
        ->check(CLI::Range(1, 63));
    fit_cmd->add_option("--model-out", fit_model_out, "Write the fitted model here");
    add_common(fit_cmd);

    std::vector<const char*> argv{"qunip"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
        app.get_subcommand_no_throw(args.front()) == nullptr) {
        return ParseExit{kExitUsage, "qunip: unknown subcommand '" + args.front() +
                                         "'\nRun with --help for more information.\n"};
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        CommandPlan plan;
        CLI::App* sub = app.get_subcommands().front();
        plan.subcommand = sub->get_name();
        if (sub == bv_cmd) {
            bv.a = checked_bits(bv_a, bv.d, "--a");
            plan.params = bv;
        } else if (sub == dj_cmd) {
            plan.params = dj;
        } else if (sub == gr_cmd) {
            if (gr.d < 64 && gr.marked >= (BasisLabel{1} << gr.d)) {
                throw CLI::ValidationError("--marked", std::to_string(gr.marked) +
                                                           " out of range for d = " +
                                                           std::to_string(gr.d));
            }
            gr.iterations = gr_iters.value_or(optimal_grover_iterations(gr.d));
            plan.params = gr;
        } else if (sub == db_cmd) {
            if (db.a_bits.empty() ||
                db.a_bits.find_first_not_of("01") != std::string::npos) {
                throw CLI::ValidationError("--a", "'" + db.a_bits + "' is not a bitstring");
            }
            if (!db_patterns.empty()) {
                db.patterns = db_patterns;
            }
            if (!db_patterns_out.empty()) {
                db.patterns_out = db_patterns_out;
            }
            plan.params = db;
        } else if (sub == en_cmd) {
            plan.params = en;
        } else if (sub == in_cmd) {
            plan.params = in;
        } else if (sub == be_cmd) {
            be.spec.b_values = parse_b_list(be_b);
            if (!be_lattice_out.empty()) {
                be.lattice_out = be_lattice_out;
            }
            plan.params = be;
        } else {
            if (fit_d_equiv > 0) {
                fit.d_equiv = fit_d_equiv;
            }
            if (!fit_model_out.empty()) {
                fit.model_out = fit_model_out;
            }
            plan.params = fit;
        }

        if (!output.empty()) {
            plan.output_path = output;
        }
        if (format.empty()) {
            plan.format = sub == be_cmd ? Format::Csv : Format::Json;
        } else {
            plan.format = format == "csv" ? Format::Csv : Format::Json;
        }
        plan.meta = !no_meta;
        plan.threads = threads;
        if (shots > 0) {
            plan.shots = shots;
        }
        plan.shots_seed = shots_seed;
        if (!state_out.empty()) {
            plan.state_out = state_out;
        }
        return plan;
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out;
        std::ostringstream err;
        app.exit(e, out, err);
        return ParseExit{kExitOk, out.str()};
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream out;
        std::ostringstream err;
        app.exit(e, out, err);
        return ParseExit{kExitOk, out.str()};
    } catch (const CLI::ParseError& e) {
        return ParseExit{kExitUsage, std::string("qunip: ") + e.what() + "\nRun with --help for more information.\n"};
    }
}

int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
    try {
        Output o = std::visit(
            overloaded{[&](const BvArgs& a) { return run_bv(plan, a); },
                       [&](const DjArgs& a) { return run_dj(plan, a); },
                       [&](const GroverArgs& a) { return run_grover(plan, a); },
                       [&](const DbArgs& a) { return run_db(plan, a); },
                       [&](const EntangleArgs& a) { return run_entangle(a); },
                       [&](const InterfereArgs& a) { return run_interfere(plan, a); },
                       [&](const BenchArgs& a) { return run_bench(plan, a); },
                       [&](const FitArgs& a) { return run_fit(a); }},
            plan.params);

        if (plan.state_out && o.final_state) {
            io::write_file(*plan.state_out, io::to_json(*o.final_state).dump(2) + "\n");
        }
        std::string text;
        if (plan.format == Format::Csv) {
            text = std::move(o.csv);
        } else {
            if (plan.meta) {
                o.doc["meta"] = {{"tool", "qunip"},
                                 {"version", kVersion},
                                 {"kernels", std::string(kernels::active().name)},
                                 {"timestamp", timestamp()}};
            }
            text = o.doc.dump(2) + "\n";
        }
        if (plan.output_path) {
            io::write_file(*plan.output_path, text);
        } else {
            out << text;
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "qunip " << plan.subcommand << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "qunip " << plan.subcommand << ": " << e.what() << "\n";
        return kExitRuntime;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto parsed = parse_args(args);
    if (auto* exit = std::get_if<ParseExit>(&parsed)) {
        (exit->code == kExitOk ? out : err) << exit->text;
        return exit->code;
    }
    return execute(std::get<CommandPlan>(parsed), out, err);
}

} // namespace qunip::cli
