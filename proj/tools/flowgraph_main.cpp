#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flowgraph/ast_json.hpp"
#include "flowgraph/ast_printer.hpp"
#include "flowgraph/data_flow.hpp"
#include "flowgraph/errors.hpp"
#include "flowgraph/flow_dot.hpp"
#include "flowgraph/flow_xml.hpp"
#include "flowgraph/parser.hpp"
#include "flowgraph/pipeline.hpp"
#include "flowgraph/synth.hpp"
#include "flowgraph/validator.hpp"

namespace {

using namespace flowgraph;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read '" + path + "'");
    }
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
}

long long micros(std::chrono::nanoseconds ns) {
    return std::chrono::duration_cast<std::chrono::microseconds>(ns).count();
}

struct TransformArgs {
    std::string input;
    std::string output;
    std::string format = "xml";
    std::string edges = "both";
    std::string dataflow = "traversal";
    bool no_controlflow = false;
    bool no_dataflow = false;
    bool stats = false;
    bool ast_json = false;
};

int cmd_transform(const TransformArgs& args) {
    if (args.no_controlflow && !args.no_dataflow) {
        std::cerr << "error: --no-controlflow requires --no-dataflow "
                     "(data flow is derived from control flow)\n";
        return 1;
    }

    PipelineOptions options;
    options.derive_cf = !args.no_controlflow;
    options.derive_df = !args.no_dataflow;
    options.fixpoint_df = args.dataflow == "fixpoint";

    PhaseTimings timings;
    std::vector<MethodResult> results;
    try {
        auto started = Clock::now();
        std::string source = read_file(args.input);
        auto unit = args.ast_json ? load_ast_json(source) : parse_java(source);
        if (args.ast_json) {
            check_semantics(*unit);
        }
        timings.read = Clock::now() - started;

        results = run_pipeline(*unit, options, &timings);

        started = Clock::now();
        std::vector<const FlowGraph*> graphs;
        graphs.reserve(results.size());
        for (const auto& result : results) {
            graphs.push_back(result.graph.get());
        }
        EdgeSet edge_set = args.edges == "cf"   ? EdgeSet::Cf
                           : args.edges == "df" ? EdgeSet::Df
                                                : EdgeSet::Both;
        std::string output =
                args.format == "dot" ? serialize_dot(graphs, edge_set) : serialize_xml(graphs);
        write_output(args.output, output);
        timings.write = Clock::now() - started;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << args.input << ":" << e.what() << "\n";
        return 1;
    }

    if (args.stats) {
        std::cerr << "phase,micros\n"
                  << "read_input," << micros(timings.read) << "\n"
                  << "transformation," << micros(timings.transform) << "\n"
                  << "derive_control_flow," << micros(timings.control_flow) << "\n"
                  << "derive_data_flow," << micros(timings.data_flow) << "\n"
                  << "write_output," << micros(timings.write) << "\n";
    }
    return 0;
}

struct ValidateArgs {
    std::string model;
    std::string assertions;
    std::string method;
};

int cmd_validate(const ValidateArgs& args) {
    std::vector<std::unique_ptr<FlowGraph>> graphs;
    std::vector<ValidationAssertion> assertions;
    try {
        graphs = deserialize_xml(read_file(args.model));
        assertions = parse_assertions(read_file(args.assertions));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const FlowGraph* graph = nullptr;
    if (args.method.empty()) {
        if (graphs.size() != 1) {
            std::cerr << "error: the model holds " << graphs.size()
                      << " graphs; select one with --method\n";
            return 2;
        }
        graph = graphs.front().get();
    } else {
        for (const auto& g : graphs) {
            if (g->method_name() == args.method ||
                g->class_name() + "." + g->method_name() == args.method) {
                if (graph != nullptr) {
                    std::cerr << "error: --method '" << args.method << "' is ambiguous\n";
                    return 2;
                }
                graph = g.get();
            }
        }
        if (graph == nullptr) {
            std::cerr << "error: no graph for method '" << args.method << "'\n";
            return 2;
        }
    }

    ValidationReport report = check(*graph, assertions);
    std::cout << render_report(report);
    std::cout << report_summary_json(report) << "\n";
    return report.all_hold() ? 0 : 1;
}

struct BenchArgs {
    std::vector<int> sizes = {10, 100, 1000};
    std::string profile = "straight";
    std::string dataflow = "traversal";
    int repeat = 3;
};

long long median_micros(std::vector<long long>& samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int cmd_bench(const BenchArgs& args) {
    BenchProfile profile = args.profile == "nested"    ? BenchProfile::Nested
                           : args.profile == "branchy" ? BenchProfile::Branchy
                                                       : BenchProfile::Straight;
    PipelineOptions options;
    options.fixpoint_df = args.dataflow == "fixpoint";

    std::printf("%8s %12s %14s %14s %14s %14s\n", "size", "read_ms", "transform_ms",
                "controlflow_ms", "dataflow_ms", "write_ms");
    for (int size : args.sizes) {
        auto method = generate_bench_method(profile, size);
        std::string source = "class Bench {\n" + to_java_source(*method) + "}\n";

        std::vector<long long> read, transform, cf, df, write;
        for (int run = 0; run < std::max(args.repeat, 1); ++run) {
            PhaseTimings timings;

            auto started = Clock::now();
            auto unit = parse_java(source);
            timings.read = Clock::now() - started;

            auto results = run_pipeline(*unit, options, &timings);

            started = Clock::now();
            std::vector<const FlowGraph*> graphs;
            for (const auto& result : results) {
                graphs.push_back(result.graph.get());
            }
            std::string output = serialize_xml(graphs);
            timings.write = Clock::now() - started;
            // keep the serializer honest
            if (output.empty()) {
                return 1;
            }

            read.push_back(micros(timings.read));
            transform.push_back(micros(timings.transform));
            cf.push_back(micros(timings.control_flow));
            df.push_back(micros(timings.data_flow));
            write.push_back(micros(timings.write));
        }

        std::printf("%8d %12.3f %14.3f %14.3f %14.3f %14.3f\n", size,
                    median_micros(read) / 1000.0, median_micros(transform) / 1000.0,
                    median_micros(cf) / 1000.0, median_micros(df) / 1000.0,
                    median_micros(write) / 1000.0);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flow graph derivation for a Java subset"};
    app.require_subcommand(1);

    TransformArgs transform_args;
    CLI::App* transform = app.add_subcommand(
            "transform", "Parse a program and derive its flow graphs");
    transform->add_option("input", transform_args.input, "input source (or JSON AST) file")
            ->required();
    transform->add_option("-o,--output", transform_args.output, "output path (default: stdout)");
    transform->add_option("--format", transform_args.format, "output format")
            ->check(CLI::IsMember({"xml", "dot"}))
            ->capture_default_str();
    transform->add_option("--edges", transform_args.edges, "edge sets in DOT output")
            ->check(CLI::IsMember({"cf", "df", "both"}))
            ->capture_default_str();
    transform->add_option("--dataflow", transform_args.dataflow, "data flow derivation mode")
            ->check(CLI::IsMember({"traversal", "fixpoint"}))
            ->capture_default_str();
    transform->add_flag("--no-controlflow", transform_args.no_controlflow,
                        "skip control flow derivation");
    transform->add_flag("--no-dataflow", transform_args.no_dataflow, "skip data flow derivation");
    transform->add_flag("--stats", transform_args.stats, "print per-phase timings to stderr");
    transform->add_flag("--ast-json", transform_args.ast_json, "treat the input as a JSON AST");

    ValidateArgs validate_args;
    CLI::App* validate =
            app.add_subcommand("validate", "Check link assertions against a serialized model");
    validate->add_option("model", validate_args.model, "serialized flow graph model")->required();
    validate->add_option("assertions", validate_args.assertions, "assertion file")->required();
    validate->add_option("--method", validate_args.method,
                         "method to validate (name or class.name)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time the pipeline on synthetic methods");
    bench->add_option("--sizes", bench_args.sizes, "statement counts")
            ->delimiter(',')
            ->capture_default_str();
    bench->add_option("--profile", bench_args.profile, "method shape")
            ->check(CLI::IsMember({"straight", "nested", "branchy"}))
            ->capture_default_str();
    bench->add_option("--dataflow", bench_args.dataflow, "data flow derivation mode")
            ->check(CLI::IsMember({"traversal", "fixpoint"}))
            ->capture_default_str();
    bench->add_option("--repeat", bench_args.repeat, "runs per size (median is reported)")
            ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (transform->parsed()) {
        return cmd_transform(transform_args);
    }
    if (validate->parsed()) {
        return cmd_validate(validate_args);
    }
    return cmd_bench(bench_args);
}
