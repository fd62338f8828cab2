// Copyright 2026 The QuboForge Authors
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quboforge/analysis.hpp"
#include "quboforge/compiler.hpp"
#include "quboforge/errors.hpp"
#include "quboforge/formats.hpp"
#include "quboforge/generators.hpp"
#include "quboforge/model_io.hpp"
#include "quboforge/samplers.hpp"

namespace quboforge::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kTspGuard = 100;
constexpr std::size_t kNppGuard = 1000;

/// Bad flags or flag combinations.
class UsageError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

struct CompileFlags {
    std::string encoding = "binary";
    std::string penalty = "auto";
    std::string quadratization = "ntr-ptr";
    std::string continuous_encoding = "ap";
    std::optional<std::int64_t> continuous_bits;
    std::string domain = "boolean";
};

void add_compile_flags(CLI::App* cmd, CompileFlags& f) {
    cmd->add_option("--encoding", f.encoding, "binary|unary|one-hot|domain-wall|bounded:<mu>|ap")
        ->capture_default_str();
    cmd->add_option("--penalty", f.penalty, "auto or a positive penalty factor")->capture_default_str();
    cmd->add_option("--quadratization", f.quadratization, "degree reduction method")->capture_default_str();
    cmd->add_option("--continuous-encoding", f.continuous_encoding, "encoding of continuous variables")
        ->capture_default_str();
    cmd->add_option("--continuous-bits", f.continuous_bits, "bits per continuous variable");
    cmd->add_option("--domain", f.domain, "boolean|spin")->capture_default_str();
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
}

CompilationSettings settings_from(const CompileFlags& f) {
    return as_usage([&] {
        CompilationSettings s;
        s.default_encoding = EncodingSpec::parse(f.encoding);
        s.continuous_encoding = EncodingSpec::parse(f.continuous_encoding);
        s.continuous_bits = f.continuous_bits;
        if (f.penalty != "auto") {
            double rho = 0.0;
            try {
                std::size_t used = 0;
                rho = std::stod(f.penalty, &used);
                if (used != f.penalty.size()) throw std::invalid_argument(f.penalty);
            } catch (const std::exception&) {
                throw UsageError("--penalty must be 'auto' or a number, got '" + f.penalty + "'");
            }
            if (!(rho > 0.0) || !std::isfinite(rho)) throw UsageError("--penalty must be positive");
            s.penalty = PenaltyMode::fixed(rho);
        }
        if (!QuadratizationRegistry::global().contains(f.quadratization)) {
            std::string known;
            for (const auto& n : QuadratizationRegistry::global().names()) known += " " + n;
            throw UsageError("unknown quadratization '" + f.quadratization + "' (known:" + known + ")");
        }
        s.quadratization = f.quadratization;
        s.target_domain = parse_domain(f.domain);
        return s;
    });
}

FileFormat format_for(const std::string& explicit_name, const std::string& path, FileFormat fallback) {
    if (!explicit_name.empty()) return as_usage([&] { return parse_file_format(explicit_name); });
    if (path.empty() || path == "-") return fallback;
    return format_from_extension(path).value_or(fallback);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    return read_text_file(path);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("QUBOFORGE_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("QUBOFORGE_SEED is not an unsigned integer: '") + env + "'");
    }
    return 0;
}

std::vector<std::int8_t> parse_state(const std::string& text) {
    std::vector<std::int8_t> state;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "0" || item == "1") {
            state.push_back(static_cast<std::int8_t>(item[0] - '0'));
        } else if (item == "-1") {
            state.push_back(-1);
        } else if (!item.empty()) {
            throw UsageError("--initial-state entries must be 0, 1 or -1, got '" + item + "'");
        }
    }
    return state;
}

// ---------------------------------------------------------------------------

struct CompileCmd {
    std::string model;
    std::string output;
    std::string format;
    std::string report;
    std::string map;
    CompileFlags flags;
};

int cmd_compile(const CompileCmd& c, std::ostream& out, std::ostream& err) {
    const CompilationSettings settings = settings_from(c.flags);
    const FileFormat format = format_for(c.format, c.output, FileFormat::BqpJson);
    const Model model = read_model_json(read_input(c.model));
    const CompilationResult result = compile(model, settings);

    std::vector<std::string> warnings;
    emit(c.output, write_instance(result.qubo, format, &warnings), out);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    if (!c.report.empty()) emit(c.report, report_to_json(result.report), out);
    if (!c.map.empty()) emit(c.map, variable_map_to_json(result.map), out);
    err << "compiled " << model.variables().size() << " variables into " << result.report.qubo_variables
        << " QUBO variables (" << result.report.linear_terms << " linear, " << result.report.quadratic_terms
        << " quadratic terms)\n";
    return kOk;
}

struct ConvertCmd {
    std::string input;
    std::string output;
    std::string from;
    std::string to;
    std::string domain;
};

int cmd_convert(const ConvertCmd& c, std::ostream& out, std::ostream& err) {
    const FileFormat from = format_for(c.from, c.input, FileFormat::BqpJson);
    const FileFormat to = format_for(c.to, c.output, FileFormat::BqpJson);
    std::optional<Domain> domain;
    if (!c.domain.empty()) domain = as_usage([&] { return parse_domain(c.domain); });
    const ConversionResult result = convert(read_input(c.input), from, to, domain);
    emit(c.output, result.text, out);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    return kOk;
}

struct SolveCmd {
    std::string input;
    std::string format;
    std::string output;
    std::string sampler = "sa";
    std::uint64_t num_reads = 100;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> sweeps;
    std::optional<double> beta_min;
    std::optional<double> beta_max;
    std::optional<std::int64_t> max_variables;
    std::string initial_state;
    std::optional<double> target;
    bool timing = false;
    std::string decode_with;
    std::string decoded;
    CompileFlags flags;
};

ordered_json decoded_json(const CompilationResult& result, const DecodedSolution& d, const Sample& s) {
    ordered_json j;
    j["feasible"] = d.feasible;
    j["objective"] = d.objective;
    j["qubo_value"] = s.value;
    ordered_json values = ordered_json::array();
    for (const auto& [id, value] : d.values) {
        ordered_json v;
        v["id"] = id;
        if (const Variable* var = result.map.source.find(id); var && var->name) v["name"] = *var->name;
        v["value"] = value;
        values.push_back(std::move(v));
    }
    j["values"] = std::move(values);
    ordered_json violations = ordered_json::array();
    for (const auto& v : d.violations) violations.push_back(v.label);
    j["violations"] = std::move(violations);
    return j;
}

int cmd_solve(const SolveCmd& c, std::ostream& out, std::ostream& err) {
    const SamplerRegistry& registry = SamplerRegistry::global();
    const Sampler& sampler = as_usage([&]() -> const Sampler& { return registry.get(c.sampler); });
    SamplerParams params;
    params.num_reads = c.num_reads;
    params.seed = resolve_seed(c.seed);
    if (c.sweeps) params.attributes["sweeps"] = *c.sweeps;
    if (c.beta_min) params.attributes["beta_min"] = *c.beta_min;
    if (c.beta_max) params.attributes["beta_max"] = *c.beta_max;
    if (c.max_variables) params.attributes["max_variables"] = *c.max_variables;
    if (!c.initial_state.empty()) params.attributes["initial_state"] = parse_state(c.initial_state);
    std::optional<CompilationSettings> settings;
    if (!c.decode_with.empty()) settings = settings_from(c.flags);

    const QuboInstance q = read_instance(read_input(c.input), format_for(c.format, c.input, FileFormat::BqpJson));
    // attribute names and domain support are configuration problems
    as_usage([&] {
        validate_params(sampler, q, params);
        return 0;
    });
    const SampleSet samples = sample(sampler, q, params);
    emit(c.output, write_sample_set_json(samples, c.timing), out);

    err << "best value " << samples.best().value << " over " << samples.total_reads() << " reads\n";
    if (c.target) {
        err << "success rate " << success_rate(samples, *c.target) << " at target " << *c.target << "\n";
    }
    if (settings) {
        const Model model = read_model_json(read_input(c.decode_with));
        const CompilationResult result = compile(model, *settings);
        if (result.qubo.variable_ids != q.variable_ids) {
            throw DataError("solve: instance variables do not match the compiled model '" + c.decode_with + "'");
        }
        std::optional<ordered_json> chosen;
        for (const Sample& s : samples.samples()) {
            const DecodedSolution d = decode_sample(result, samples, s);
            if (d.feasible) {
                chosen = decoded_json(result, d, s);
                break;
            }
        }
        if (!chosen) {
            const Sample& s = samples.best();
            chosen = decoded_json(result, decode_sample(result, samples, s), s);
            err << "no feasible sample; decoded the lowest-energy one\n";
        } else {
            err << "best feasible objective " << (*chosen)["objective"].get<double>() << "\n";
        }
        if (!c.decoded.empty()) emit(c.decoded, chosen->dump(2) + "\n", out);
    }
    return kOk;
}

struct AnalyzeCmd {
    std::string input;
    std::string format;
    std::string samples;
    std::string report;
    std::string histogram;
    std::string density;
    std::optional<double> target;
    std::optional<double> seconds;
};

int cmd_analyze(const AnalyzeCmd& c, std::ostream& out, std::ostream& err) {
    const QuboInstance q = read_instance(read_input(c.input), format_for(c.format, c.input, FileFormat::BqpJson));
    const ModelReport model = model_report(q);
    std::optional<SolutionReport> solution;
    if (!c.samples.empty()) {
        const SampleSet samples = read_sample_set_json(read_input(c.samples));
        if (samples.empty()) throw DataError("analyze: sample file has no samples");
        for (VarId id : samples.variable_ids()) {
            if (!std::binary_search(q.variable_ids.begin(), q.variable_ids.end(), id)) {
                throw DataError("analyze: samples reference unknown variable " + std::to_string(id));
            }
        }
        if (samples.variable_ids() != q.variable_ids) {
            throw DataError("analyze: samples do not cover every instance variable");
        }
        const QuboInstance same_domain = to_domain(q, samples.domain());
        for (const Sample& s : samples.samples()) {
            const double e = energy(same_domain, s.state);
            if (std::abs(e - s.value) > 1e-9 * std::max(1.0, std::abs(e))) {
                throw DataError("analyze: stored sample value does not match the instance energy");
            }
        }
        solution = solution_report(samples, c.target, c.seconds);
        if (!c.histogram.empty()) emit(c.histogram, histogram_csv(samples), out);
        err << "best value " << solution->best_value;
        if (solution->success_rate) err << ", success rate " << *solution->success_rate;
        err << "\n";
    } else if (!c.histogram.empty()) {
        throw UsageError("--histogram needs --samples");
    }
    if (!c.density.empty()) emit(c.density, density_csv(q), out);
    emit(c.report, analysis_report_json(model, solution), out);
    return kOk;
}

struct GenerateCmd {
    std::string type;
    std::int64_t n = 0;
    std::optional<std::uint64_t> seed;
    double density = 0.5;
    std::string distances;
    std::string output;
    std::string format;
};

std::vector<std::vector<double>> read_distances(const std::string& path, std::size_t n) {
    const std::string text = read_input(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("distances: ") + e.what(), 0, 0);
    }
    std::vector<std::vector<double>> d;
    try {
        d = doc.get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception&) {
        throw DataError("distances: expected a square array of numbers");
    }
    if (d.size() != n) throw DataError("distances: matrix size does not match --n");
    for (const auto& row : d) {
        if (row.size() != n) throw DataError("distances: matrix is not square");
    }
    return d;
}

int cmd_generate(const GenerateCmd& c, std::ostream& out, std::ostream&) {
    if (c.n < 1) throw UsageError("--n must be at least 1");
    const auto n = static_cast<std::size_t>(c.n);
    const std::uint64_t seed = resolve_seed(c.seed);
    if (c.type == "random") {
        if (!(c.density > 0.0 && c.density <= 1.0)) throw UsageError("--density must lie in (0, 1]");
        const FileFormat format = format_for(c.format, c.output, FileFormat::BqpJson);
        emit(c.output, write_instance(random_qubo(n, c.density, seed), format), out);
    } else if (c.type == "tsp") {
        if (n < 2) throw UsageError("tsp needs --n >= 2");
        const auto d = c.distances.empty() ? random_distances(n, seed) : read_distances(c.distances, n);
        emit(c.output, write_model_json(tsp_model(n, d)), out);
    } else if (c.type == "npp") {
        emit(c.output, write_model_json(npp_model(npp_benchmark_weights(n))), out);
    } else {
        throw UsageError("--type must be random, tsp or npp");
    }
    return kOk;
}

struct BenchCmd {
    std::string problem;
    std::string sizes;
    std::string csv;
    std::optional<std::uint64_t> seed;
};

std::vector<std::int64_t> parse_sizes(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--sizes must look like a:b:step, got '" + text + "'");
        }
    }
    if (parts.size() == 1) parts = {parts[0], parts[0], 1};
    if (parts.size() == 2) parts.push_back(1);
    if (parts.size() != 3 || parts[0] < 1 || parts[1] < parts[0] || parts[2] < 1) {
        throw UsageError("--sizes must look like a:b:step with 1 <= a <= b and step >= 1");
    }
    std::vector<std::int64_t> sizes;
    for (std::int64_t s = parts[0]; s <= parts[1]; s += parts[2]) sizes.push_back(s);
    return sizes;
}

int cmd_bench(const BenchCmd& c, std::ostream& out, std::ostream& err) {
    if (c.problem != "tsp" && c.problem != "npp") throw UsageError("--problem must be tsp or npp");
    const auto sizes = parse_sizes(c.sizes);
    const std::size_t guard = c.problem == "tsp" ? kTspGuard : kNppGuard;
    if (static_cast<std::size_t>(sizes.back()) > guard) {
        throw CapacityError("bench: " + c.problem + " size " + std::to_string(sizes.back()) +
                                " exceeds the limit of " + std::to_string(guard),
                            static_cast<std::uint64_t>(sizes.back()), guard);
    }
    const std::uint64_t seed = resolve_seed(c.seed);
    std::string csv = "problem,n_vars,compile_seconds,qubo_vars,qubo_terms\n";
    for (std::int64_t size : sizes) {
        const auto n = static_cast<std::size_t>(size);
        const Model model = c.problem == "tsp" ? tsp_model(n, random_distances(n, seed))
                                               : npp_model(npp_benchmark_weights(n));
        const auto start = std::chrono::steady_clock::now();
        const CompilationResult result = compile(model);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        char seconds[32];
        std::snprintf(seconds, sizeof seconds, "%.6f", elapsed.count());
        csv += c.problem + "," + std::to_string(model.variables().size()) + "," + seconds + "," +
               std::to_string(result.report.qubo_variables) + "," +
               std::to_string(result.report.linear_terms + result.report.quadratic_terms) + "\n";
        err << c.problem << " " << size << ": " << seconds << " s\n";
    }
    emit(c.csv, csv, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"QUBO modelling, conversion and sampling toolkit", "quboforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "quboforge 0.1.0");

    CompileCmd compile_cmd;
    auto* compile_app = app.add_subcommand("compile", "compile a constrained model into a QUBO");
    compile_app->add_option("model", compile_cmd.model, "model JSON file")->required();
    compile_app->add_option("-o,--output", compile_cmd.output, "QUBO output file (stdout if omitted)");
    compile_app->add_option("--format", compile_cmd.format, "bqpjson|qubo|qubist (default from extension)");
    compile_app->add_option("--report", compile_cmd.report, "write the compilation report JSON ('-' for stdout)");
    compile_app->add_option("--map", compile_cmd.map, "write the variable map JSON");
    add_compile_flags(compile_app, compile_cmd.flags);

    ConvertCmd convert_cmd;
    auto* convert_app = app.add_subcommand("convert", "convert between QUBO file formats");
    convert_app->add_option("input", convert_cmd.input, "input file")->required();
    convert_app->add_option("-o,--output", convert_cmd.output, "output file (stdout if omitted)");
    convert_app->add_option("--from", convert_cmd.from, "input format (default from extension)");
    convert_app->add_option("--to", convert_cmd.to, "output format (default from extension)");
    convert_app->add_option("--domain", convert_cmd.domain, "boolean|spin");

    SolveCmd solve_cmd;
    auto* solve_app = app.add_subcommand("solve", "sample a QUBO instance");
    solve_app->add_option("input", solve_cmd.input, "instance file")->required();
    solve_app->add_option("--format", solve_cmd.format, "input format (default from extension)");
    solve_app->add_option("-o,--output", solve_cmd.output, "sample set JSON (stdout if omitted)");
    solve_app->add_option("--sampler", solve_cmd.sampler, "registered sampler name")->capture_default_str();
    solve_app->add_option("--num-reads", solve_cmd.num_reads, "number of reads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    solve_app->add_option("--seed", solve_cmd.seed, "random seed (default $QUBOFORGE_SEED, else 0)");
    solve_app->add_option("--sweeps", solve_cmd.sweeps, "annealing sweeps per read");
    solve_app->add_option("--beta-min", solve_cmd.beta_min, "initial inverse temperature");
    solve_app->add_option("--beta-max", solve_cmd.beta_max, "final inverse temperature");
    solve_app->add_option("--max-variables", solve_cmd.max_variables, "exact sampler size cap");
    solve_app->add_option("--initial-state", solve_cmd.initial_state, "comma separated state for identity");
    solve_app->add_option("--target", solve_cmd.target, "report the success rate at this value");
    solve_app->add_flag("--timing", solve_cmd.timing, "include wall-clock timing in the sample file");
    solve_app->add_option("--decode-with", solve_cmd.decode_with, "source model to decode samples against");
    solve_app->add_option("--decoded", solve_cmd.decoded, "decoded solution JSON output")->needs("--decode-with");
    add_compile_flags(solve_app, solve_cmd.flags);

    AnalyzeCmd analyze_cmd;
    auto* analyze_app = app.add_subcommand("analyze", "model and solution statistics");
    analyze_app->add_option("input", analyze_cmd.input, "instance file")->required();
    analyze_app->add_option("--format", analyze_cmd.format, "input format (default from extension)");
    analyze_app->add_option("--samples", analyze_cmd.samples, "sample set JSON");
    analyze_app->add_option("--report", analyze_cmd.report, "report JSON output (stdout if omitted)");
    analyze_app->add_option("--histogram", analyze_cmd.histogram, "energy histogram CSV output");
    analyze_app->add_option("--density", analyze_cmd.density, "coefficient CSV output");
    analyze_app->add_option("--target", analyze_cmd.target, "target value for success rate and TTS");
    analyze_app->add_option("--seconds", analyze_cmd.seconds, "run time for TTS when the samples carry none")
        ->check(CLI::PositiveNumber);

    GenerateCmd generate_cmd;
    auto* generate_app = app.add_subcommand("generate", "generate instances and models");
    generate_app->add_option("--type", generate_cmd.type, "random|tsp|npp")->required();
    generate_app->add_option("--n", generate_cmd.n, "size (variables, cities or weights)")->required();
    generate_app->add_option("--seed", generate_cmd.seed, "random seed (default $QUBOFORGE_SEED, else 0)");
    generate_app->add_option("--density", generate_cmd.density, "term density for random instances")
        ->capture_default_str();
    generate_app->add_option("--distances", generate_cmd.distances, "JSON distance matrix for tsp");
    generate_app->add_option("-o,--output", generate_cmd.output, "output file (stdout if omitted)");
    generate_app->add_option("--format", generate_cmd.format, "format for random instances");

    BenchCmd bench_cmd;
    auto* bench_app = app.add_subcommand("bench", "time model compilation across sizes");
    bench_app->add_option("--problem", bench_cmd.problem, "tsp|npp")->required();
    bench_app->add_option("--sizes", bench_cmd.sizes, "a:b:step")->required();
    bench_app->add_option("--csv", bench_cmd.csv, "CSV output (stdout if omitted)");
    bench_app->add_option("--seed", bench_cmd.seed, "seed for tsp distances");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::vector<std::pair<CLI::App*, std::function<int()>>> commands = {
        {compile_app, [&] { return cmd_compile(compile_cmd, out, err); }},
        {convert_app, [&] { return cmd_convert(convert_cmd, out, err); }},
        {solve_app, [&] { return cmd_solve(solve_cmd, out, err); }},
        {analyze_app, [&] { return cmd_analyze(analyze_cmd, out, err); }},
        {generate_app, [&] { return cmd_generate(generate_cmd, out, err); }},
        {bench_app, [&] { return cmd_bench(bench_cmd, out, err); }},
    };
    try {
        for (const auto& [sub, action] : commands) {
            if (sub->parsed()) return action();
        }
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kData;
    }
}

}  // namespace quboforge::cli
