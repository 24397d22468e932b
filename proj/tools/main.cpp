#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qwalk/amplify.hpp"
#include "qwalk/decider.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/json_io.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        qwalk::fail(qwalk::ErrorCode::MalformedInput, "cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& output_path, const std::string& payload) {
    if (output_path.empty() || output_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        qwalk::fail(qwalk::ErrorCode::MalformedInput, "cannot open output file '" + output_path + "'");
    }
    out << payload;
}

std::string pretty(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

struct GenOptions {
    std::string kind;
    int n = 0;
    int d = -1;
    std::uint64_t seed = 0;
    int s = 0;
    int t = -1;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    qwalk::GraphKind kind;
    int d = opt.d;
    if (opt.kind == "cycle") {
        kind = qwalk::GraphKind::Cycle;
        if (d < 0) d = 2;
    } else if (opt.kind == "complete") {
        kind = qwalk::GraphKind::Complete;
        if (d < 0) d = opt.n - 1;
    } else {
        kind = qwalk::GraphKind::RandomRegular;
        if (d < 0) {
            qwalk::fail(qwalk::ErrorCode::InfeasibleParameters, "random_regular needs --d");
        }
    }
    qwalk::ProblemInstance instance;
    instance.graph = qwalk::generate(kind, opt.n, d, opt.seed);
    instance.s = opt.s;
    instance.t = opt.t < 0 ? opt.n - 1 : opt.t;
    if (instance.s < 0 || instance.s >= opt.n || instance.t < 0 || instance.t >= opt.n) {
        qwalk::fail(qwalk::ErrorCode::VertexOutOfRange, "s and t must lie in [0, n)");
    }
    emit(opt.output, qwalk::serialize_instance(instance));
    return kExitAccept;
}

int run_validate(const std::string& input, const std::string& output) {
    nlohmann::json doc;
    int code = kExitAccept;
    try {
        const qwalk::ProblemInstance instance = qwalk::parse_instance(slurp_file(input));
        const qwalk::ComponentMap map = qwalk::components(instance.graph);
        doc = {
            {"valid", true},
            {"n", instance.graph.n},
            {"d", instance.graph.d},
            {"edges", instance.graph.edge_count()},
            {"s", instance.s},
            {"t", instance.t},
            {"num_components", map.count()},
            {"s_t_connected", map.connected(instance.s, instance.t)},
        };
    } catch (const qwalk::Error& error) {
        doc = {
            {"valid", false},
            {"error", {{"code", qwalk::to_string(error.code())}, {"message", error.what()}}},
        };
        code = kExitUsage;
    }
    emit(output, pretty(doc));
    return code;
}

struct DecideOptions {
    std::string input;
    std::optional<std::int64_t> k;
    bool sample = false;
    std::uint64_t seed = 0;
    std::string output;
};

int run_decide(const DecideOptions& opt) {
    const qwalk::ProblemInstance instance = qwalk::parse_instance(slurp_file(opt.input));
    const qwalk::DeciderReport report = qwalk::decide(instance, opt.k);
    nlohmann::json doc = qwalk::to_json(report);
    if (opt.sample) {
        const bool sampled = qwalk::sample_acceptance(report.acceptance_probability, opt.seed);
        doc["sampled_verdict"] = sampled ? "accept" : "reject";
        doc["sample_seed"] = opt.seed;
    }
    emit(opt.output, pretty(doc));
    return report.accept ? kExitAccept : kExitReject;
}

int run_spectrum(const std::string& input, std::optional<int> start, const std::string& output) {
    const qwalk::ProblemInstance instance = qwalk::parse_instance(slurp_file(input));
    const auto reports = qwalk::analyze(instance.graph, start);
    emit(output, pretty(qwalk::spectrum_document(instance.graph, reports)));
    return kExitAccept;
}

struct ConvergeOptions {
    std::string input;
    std::optional<int> start;
    std::int64_t lmax = 50;
    std::string output;
};

int run_converge(const ConvergeOptions& opt) {
    const qwalk::ProblemInstance instance = qwalk::parse_instance(slurp_file(opt.input));
    const qwalk::RegularGraph& graph = instance.graph;
    const int start = opt.start.value_or(instance.s);
    if (start < 0 || start >= graph.n) {
        qwalk::fail(qwalk::ErrorCode::VertexOutOfRange, "start vertex outside [0, n)");
    }
    if (opt.lmax < 1) {
        qwalk::fail(qwalk::ErrorCode::OutOfRange, "lmax must be at least 1");
    }

    const qwalk::ComponentMap map = qwalk::components(graph);
    const int component = map.component_id[start];
    const auto verts = map.vertices_of(component);
    const int n_u = map.sizes[component];

    std::string csv = "l,distance,bound,classical_tv\n";
    for (std::int64_t l = 1; l <= opt.lmax; ++l) {
        const double distance = qwalk::convergence_distance(graph, start, l);
        const double bound = qwalk::distance_bound(graph.d, n_u, l);
        const auto classical = qwalk::classical_distribution(graph, start, l);
        const double tv = qwalk::total_variation_to_uniform(classical, verts);
        csv += std::to_string(l) + "," + format_double(distance) + "," + format_double(bound) +
               "," + format_double(tv) + "\n";
    }
    emit(opt.output, csv);
    return kExitAccept;
}

struct AmplifyOptions {
    double p = 0.0;
    std::optional<std::int64_t> f;
    std::optional<double> target;
    std::string output;
};

int run_amplify(const AmplifyOptions& opt) {
    if (!opt.f.has_value() && !opt.target.has_value()) {
        qwalk::fail(qwalk::ErrorCode::OutOfRange, "need --f, --target, or both");
    }
    nlohmann::json doc{{"p", opt.p}};
    if (opt.f.has_value()) {
        doc["f"] = *opt.f;
        doc["amplified"] = qwalk::amplified_probability(opt.p, *opt.f);
        doc["simulation"] = qwalk::to_json(qwalk::simulate_amplifier(opt.p, *opt.f));
    }
    if (opt.target.has_value()) {
        doc["plan"] = qwalk::to_json(qwalk::plan_repetitions(opt.p, *opt.target));
    }
    emit(opt.output, pretty(doc));
    return kExitAccept;
}

int run_regularize(const std::string& input, const std::string& output) {
    const qwalk::EdgeListInstance parsed = qwalk::parse_edge_list_instance(slurp_file(input));
    const qwalk::RegularizeResult result = qwalk::regularize(parsed.graph, parsed.s, parsed.t);
    qwalk::ProblemInstance instance{result.graph, result.s, result.t};
    emit(output, qwalk::serialize_instance(instance));
    return kExitAccept;
}

int usage_exit_code(const qwalk::Error& error) {
    return error.code() == qwalk::ErrorCode::GenerationFailed ? kExitNumerical : kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-walk connectivity simulator"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph instance file");
    gen_cmd->add_option("--kind", gen.kind, "cycle | complete | random_regular")
        ->required()
        ->check(CLI::IsMember({"cycle", "complete", "random_regular"}));
    gen_cmd->add_option("--n", gen.n, "vertex count")->required();
    gen_cmd->add_option("--d", gen.d, "degree (defaults per kind)");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--s", gen.s, "start vertex written to the instance");
    gen_cmd->add_option("--t", gen.t, "target vertex written to the instance (default n-1)");
    gen_cmd->add_option("--output", gen.output, "output path (default stdout)");

    std::string validate_input;
    std::string validate_output;
    auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
    validate_cmd->add_option("--input", validate_input, "instance file")->required();
    validate_cmd->add_option("--output", validate_output, "output path (default stdout)");

    DecideOptions decide;
    std::int64_t decide_k = -1;
    auto* decide_cmd = app.add_subcommand("decide", "decide s-t connectivity via the walk");
    decide_cmd->add_option("--input", decide.input, "instance file")->required();
    auto* k_opt = decide_cmd->add_option("--k", decide_k, "step count override");
    decide_cmd->add_flag("--sample", decide.sample, "also sample a verdict from the probability");
    decide_cmd->add_option("--seed", decide.seed, "sampling seed");
    decide_cmd->add_option("--output", decide.output, "output path (default stdout)");

    std::string spectrum_input;
    std::string spectrum_output;
    int spectrum_start = -1;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "per-component eigenvalue report");
    spectrum_cmd->add_option("--input", spectrum_input, "instance file")->required();
    auto* start_opt = spectrum_cmd->add_option("--start", spectrum_start,
                                               "vertex whose eigenbasis overlaps to report");
    spectrum_cmd->add_option("--output", spectrum_output, "output path (default stdout)");

    ConvergeOptions converge;
    int converge_start = -1;
    auto* converge_cmd = app.add_subcommand("converge", "CSV convergence curve");
    converge_cmd->add_option("--input", converge.input, "instance file")->required();
    auto* cstart_opt = converge_cmd->add_option("--start", converge_start,
                                                "start vertex (default: instance s)");
    converge_cmd->add_option("--lmax", converge.lmax, "last step of the curve (default 50)");
    converge_cmd->add_option("--output", converge.output, "output path (default stdout)");

    AmplifyOptions amplify;
    std::int64_t amplify_f = -1;
    double amplify_target = -1.0;
    auto* amplify_cmd = app.add_subcommand("amplify", "acceptance-probability amplification");
    amplify_cmd->add_option("--p", amplify.p, "base acceptance probability")->required();
    auto* f_opt = amplify_cmd->add_option("--f", amplify_f, "repetition count");
    auto* target_opt = amplify_cmd->add_option("--target", amplify_target,
                                               "plan the smallest f reaching this probability");
    amplify_cmd->add_option("--output", amplify.output, "output path (default stdout)");

    std::string regularize_input;
    std::string regularize_output;
    auto* regularize_cmd =
        app.add_subcommand("regularize", "reduce an arbitrary graph to a 3-regular instance");
    regularize_cmd->add_option("--input", regularize_input, "edge-list file (n m header)")
        ->required();
    regularize_cmd->add_option("--output", regularize_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (validate_cmd->parsed()) return run_validate(validate_input, validate_output);
        if (decide_cmd->parsed()) {
            if (k_opt->count() > 0) decide.k = decide_k;
            return run_decide(decide);
        }
        if (spectrum_cmd->parsed()) {
            std::optional<int> start;
            if (start_opt->count() > 0) start = spectrum_start;
            return run_spectrum(spectrum_input, start, spectrum_output);
        }
        if (converge_cmd->parsed()) {
            if (cstart_opt->count() > 0) converge.start = converge_start;
            return run_converge(converge);
        }
        if (amplify_cmd->parsed()) {
            if (f_opt->count() > 0) amplify.f = amplify_f;
            if (target_opt->count() > 0) amplify.target = amplify_target;
            return run_amplify(amplify);
        }
        if (regularize_cmd->parsed()) return run_regularize(regularize_input, regularize_output);
    } catch (const qwalk::Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return usage_exit_code(error);
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
