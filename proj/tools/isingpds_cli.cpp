// Copyright 2026 The isingpds Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isingpds/baselines.hpp"
#include "isingpds/errors.hpp"
#include "isingpds/generators.hpp"
#include "isingpds/io.hpp"
#include "isingpds/metrics.hpp"
#include "isingpds/solver.hpp"

using namespace isingpds;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainFlags {
    std::optional<double> mu;
    std::string mu_rule = "scaled";
    double mu_scale = 0.01;
    std::size_t restarts = 5;
    std::size_t max_iterations = 1000;
    double learning_rate = 6.0;
    bool no_pruning = false;

    void attach(CLI::App* app) {
        app->add_option("--mu", mu, "Penalty value (overrides --mu-rule)");
        app->add_option("--mu-rule", mu_rule, "Penalty rule when --mu is absent")
                ->check(CLI::IsMember({"scaled", "dominant"}));
        app->add_option("--mu-scale", mu_scale, "Factor for the scaled penalty rule");
        app->add_option("--restarts", restarts, "Independent restarts");
        app->add_option("--max-iterations", max_iterations, "Iteration cap per restart");
        app->add_option("--lr", learning_rate, "Learning rate");
        app->add_flag("--no-pruning", no_pruning, "Skip pruning");
    }

    SolveConfig config(std::uint64_t seed) const {
        SolveConfig c;
        c.domain.mu = mu;
        c.domain.mu_rule = mu_rule == "dominant" ? MuRule::kDominant : MuRule::kScaled;
        c.domain.mu_scale = mu_scale;
        c.domain.restarts = restarts;
        c.domain.max_iterations = max_iterations;
        c.domain.learning_rate = learning_rate;
        c.domain.seed = seed;
        c.enable_pruning = !no_pruning;
        return c;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t d = 0;
    std::optional<std::size_t> k;
    double density = 0.5;
    double clause_ratio = 2.11;
    double alpha_max = 1000.0;
    std::string j_dist = "uniform:1";
    std::string h_dist = "uniform:6";
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenArgs& a) {
    InstanceSpec spec;
    spec.family = parse_family(a.family);
    spec.d = a.d;
    spec.k = a.k.value_or(spec.family == Family::kMaxCut3 ? 3 : 6);
    spec.density = a.density;
    spec.clause_ratio = a.clause_ratio;
    spec.alpha_max = a.alpha_max;
    spec.j_dist = Distribution::parse(a.j_dist);
    spec.h_dist = Distribution::parse(a.h_dist);
    spec.seed = a.seed;
    const IsingModel model = generate(spec);
    if (a.output.empty() || a.output == "-") {
        std::cout << instance_to_json(model, spec).dump() << '\n';
    } else {
        save_instance(a.output, model, spec);
    }
    return 0;
}

// solve --------------------------------------------------------------------

struct SolveArgs {
    std::string input;
    std::uint64_t seed = 0;
    bool json_out = false;
    bool timing = false;
    std::string csv;
    DomainFlags domain;
};

void append_csv(const std::string& path, const ResultRecord& record) {
    bool fresh = true;
    {
        std::ifstream probe(path);
        fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (fresh) out << kResultCsvHeader << '\n';
    out << to_csv_row(record) << '\n';
}

ResultRecord record_of(const SolveResult& r, std::string id, std::string family, std::uint64_t seed,
                       bool pruning) {
    ResultRecord rec;
    rec.instance_id = std::move(id);
    rec.family = std::move(family);
    rec.d = r.s.size();
    rec.seed = seed;
    rec.eta = r.eta;
    rec.iterations = r.iterations;
    rec.wall_time_s = r.wall_time_s;
    rec.energy = r.energy;
    rec.chi_hat = r.chi_hat;
    rec.tts = r.tts;
    rec.speed = r.speed;
    rec.solver = pruning ? "pds" : "ds";
    return rec;
}

int run_solve(const SolveArgs& a) {
    const IsingModel model = load_instance(a.input);
    const SolveResult r = solve(model, a.domain.config(a.seed));
    if (a.json_out) {
        std::cout << result_to_json(r, a.timing).dump() << '\n';
    } else {
        std::cout << "d " << model.size() << '\n'
                  << "energy " << fmt(r.energy) << '\n'
                  << "eta " << fmt(r.eta) << '\n'
                  << "reduced_d " << r.reduced_d << '\n'
                  << "iterations " << r.iterations << '\n'
                  << "chi_hat " << (r.chi_hat ? fmt(*r.chi_hat) : "n/a") << '\n';
        if (a.timing) {
            std::cout << "wall_time_s " << fmt(r.wall_time_s) << '\n'
                      << "tts " << (r.tts ? fmt(*r.tts) : "n/a") << '\n';
        }
        std::cout << "spins";
        for (Spin s : r.s.values()) std::cout << ' ' << int(s);
        std::cout << '\n';
    }
    if (!a.csv.empty()) {
        append_csv(a.csv, record_of(r, a.input, "file", a.seed, !a.domain.no_pruning));
    }
    return 0;
}

// bench --------------------------------------------------------------------

struct BenchArgs {
    std::string preset;
    std::string specs;
    std::size_t instances = 20;
    std::optional<std::size_t> d;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::string output;
    DomainFlags domain;
};

std::vector<InstanceSpec> preset_specs(const std::string& preset, std::size_t n, std::optional<std::size_t> d,
                                       std::uint64_t seed) {
    std::vector<InstanceSpec> out;
    const std::map<std::string, RegularEnsemble> table1 = {{"table1-uniform", RegularEnsemble::kUniform},
                                                           {"table1-gaussian", RegularEnsemble::kGaussian},
                                                           {"table1-binary", RegularEnsemble::kBinary}};
    if (auto it = table1.find(preset); it != table1.end()) {
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(regular_ensemble_spec(it->second, d.value_or(1000), member_seed(seed, i)));
        }
        return out;
    }
    if (preset == "table2") {
        for (std::size_t i = 0; i < n; ++i) out.push_back(comparison_ensemble_spec(d.value_or(1000), seed, i));
        return out;
    }
    const std::string prefix = "table3-";
    if (preset.rfind(prefix, 0) == 0) {
        Family family;
        try {
            family = parse_family(preset.substr(prefix.size()));
        } catch (const std::exception&) {
            throw UsageError("unknown preset '" + preset + "'");
        }
        for (std::size_t i = 0; i < n; ++i) {
            InstanceSpec spec;
            spec.family = family;
            spec.d = d.value_or(200);
            if (family == Family::kMaxCut3) spec.k = 3;
            spec.seed = member_seed(seed, i);
            out.push_back(spec);
        }
        return out;
    }
    throw UsageError("unknown preset '" + preset + "'");
}

std::vector<InstanceSpec> file_specs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad spec list: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("spec list must be a JSON array");
    std::vector<InstanceSpec> out;
    for (const auto& item : doc) out.push_back(spec_from_json(item));
    return out;
}

int run_bench(const BenchArgs& a) {
    if (a.preset.empty() == a.specs.empty()) throw UsageError("give exactly one of --preset or --specs");
    const std::vector<InstanceSpec> specs =
            a.specs.empty() ? preset_specs(a.preset, a.instances, a.d, a.seed) : file_specs(a.specs);
    std::vector<IsingModel> models;
    models.reserve(specs.size());
    for (const auto& spec : specs) models.push_back(generate(spec));

    const SolveConfig config = a.domain.config(a.seed);
    const std::vector<BatchSlot> slots = solve_many(models, config, a.threads);

    std::ofstream file;
    if (!a.output.empty() && a.output != "-") {
        file.open(a.output);
        if (!file) throw std::runtime_error("cannot open " + a.output);
    }
    std::ostream& out = file.is_open() ? file : std::cout;
    out << kResultCsvHeader << '\n';
    const std::string tag = a.preset.empty() ? "spec" : a.preset;
    int failures = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const std::string id = tag + "-" + std::to_string(i);
        if (!slots[i].result) {
            std::cerr << id << ": " << slots[i].error << '\n';
            ++failures;
            continue;
        }
        out << to_csv_row(record_of(*slots[i].result, id, family_name(specs[i].family), specs[i].seed,
                                    config.enable_pruning))
            << '\n';
    }
    return failures == 0 ? 0 : 1;
}

// estimate-eta -------------------------------------------------------------

struct EtaArgs {
    double k = 6;
    double alpha = 1;
    double beta = 6;
    bool json_out = false;
};

int run_eta(const EtaArgs& a) {
    const double eta = estimate_eta1(a.k, a.alpha, a.beta);
    if (a.json_out) {
        std::cout << json{{"k", a.k}, {"alpha", a.alpha}, {"beta", a.beta}, {"eta1", eta}}.dump() << '\n';
    } else {
        std::printf("%.6f\n", eta);
    }
    return 0;
}

// baseline -----------------------------------------------------------------

struct BaselineArgs {
    std::string input;
    std::string method = "sa";
    std::uint64_t seed = 0;
    std::optional<std::size_t> sweeps;
    bool json_out = false;
};

int run_baseline(const BaselineArgs& a) {
    const IsingModel model = load_instance(a.input);
    SpinConfiguration s;
    double e = 0.0;
    if (a.method == "oracle") {
        ExactSolution x = brute_force(model);
        s = std::move(x.s);
        e = x.energy;
    } else if (a.method == "sd") {
        std::mt19937_64 rng(a.seed);
        std::vector<Spin> start(model.size());
        for (auto& v : start) v = (rng() & 1u) ? 1 : -1;
        LocalSearchResult x = steepest_descent(model, SpinConfiguration(std::move(start)));
        s = std::move(x.s);
        e = x.energy;
    } else {
        AnnealSchedule schedule = default_schedule(model);
        if (a.sweeps) schedule.sweeps = *a.sweeps;
        AnnealResult x = simulated_annealing(model, schedule, a.seed);
        s = std::move(x.s);
        e = x.energy;
    }
    std::optional<double> chi;
    if (energy_scale(model) > 0.0) chi = chi_hat(model, e);
    if (a.json_out) {
        json doc = {{"method", a.method}, {"d", model.size()}, {"energy", e},
                    {"spins", std::vector<int>(s.values().begin(), s.values().end())}};
        doc["chi_hat"] = chi ? json(*chi) : json(nullptr);
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "method " << a.method << '\n'
                  << "energy " << fmt(e) << '\n'
                  << "chi_hat " << (chi ? fmt(*chi) : "n/a") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ising ground-state search by pruning and domain selection"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("--family", gen.family, "k-regular, complete, complete-scale, maxcut-3, maxcut-d, "
                                                "sk-ising, sk-qubo, nae-3sat")
            ->required();
    gen_cmd->add_option("--d", gen.d, "Number of spins (variables for nae-3sat)")->required();
    gen_cmd->add_option("--k", gen.k, "Degree for regular families");
    gen_cmd->add_option("--density", gen.density, "Edge density for maxcut-d");
    gen_cmd->add_option("--clause-ratio", gen.clause_ratio, "Clauses per variable for nae-3sat");
    gen_cmd->add_option("--alpha-max", gen.alpha_max, "Scale bound for complete-scale");
    gen_cmd->add_option("--j-dist", gen.j_dist, "Coupling distribution, e.g. uniform:1");
    gen_cmd->add_option("--h-dist", gen.h_dist, "Field distribution, e.g. gaussian:12");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (stdout when omitted)");

    SolveArgs sol;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    solve_cmd->add_option("input", sol.input, "Instance file (ising-v1 JSON or edge list)")->required();
    solve_cmd->add_option("--seed", sol.seed, "Random seed");
    solve_cmd->add_flag("--json", sol.json_out, "Print the result as JSON");
    solve_cmd->add_flag("--timing", sol.timing, "Include wall time and time-to-solution");
    solve_cmd->add_option("--csv", sol.csv, "Append a result row to this CSV file");
    sol.domain.attach(solve_cmd);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Solve a generated ensemble and write CSV");
    bench_cmd->add_option("--preset", bench.preset,
                          "table1-uniform, table1-gaussian, table1-binary, table2, table3-<family>");
    bench_cmd->add_option("--specs", bench.specs, "JSON array of generator specs");
    bench_cmd->add_option("--instances", bench.instances, "Ensemble size for presets");
    bench_cmd->add_option("--d", bench.d, "Override the preset size");
    bench_cmd->add_option("--seed", bench.seed, "Master seed");
    bench_cmd->add_option("--threads", bench.threads, "Worker threads (0: ISINGPDS_THREADS or all cores)");
    bench_cmd->add_option("-o,--output", bench.output, "CSV file (stdout when omitted)");
    bench.domain.attach(bench_cmd);

    EtaArgs eta;
    auto* eta_cmd = app.add_subcommand("estimate-eta", "First-round pruning-rate estimate");
    eta_cmd->add_option("--k", eta.k, "Degree");
    eta_cmd->add_option("--alpha", eta.alpha, "Coupling half-width");
    eta_cmd->add_option("--beta", eta.beta, "Field half-width");
    eta_cmd->add_flag("--json", eta.json_out, "Print as JSON");

    BaselineArgs base;
    auto* base_cmd = app.add_subcommand("baseline", "Run a reference solver on an instance file");
    base_cmd->add_option("input", base.input, "Instance file")->required();
    base_cmd->add_option("--method", base.method, "oracle, sd or sa")
            ->check(CLI::IsMember({"oracle", "sd", "sa"}));
    base_cmd->add_option("--seed", base.seed, "Random seed");
    base_cmd->add_option("--sweeps", base.sweeps, "Annealing sweeps");
    base_cmd->add_flag("--json", base.json_out, "Print as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(sol);
        if (*bench_cmd) return run_bench(bench);
        if (*eta_cmd) return run_eta(eta);
        if (*base_cmd) return run_baseline(base);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
