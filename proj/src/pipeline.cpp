#include "flowgraph/pipeline.hpp"

#include "flowgraph/control_flow.hpp"
#include "flowgraph/data_flow.hpp"
#include "flowgraph/structure_transform.hpp"
#include "flowgraph/transform_engine.hpp"

namespace flowgraph {

namespace {

using Clock = std::chrono::steady_clock;

MethodResult run_method(const MethodDecl& method, const std::string& class_name,
                        const PipelineOptions& options, PhaseTimings* timings) {
    TransformationContext context;
    StructurePass structure(context);

    auto started = Clock::now();
    auto graph = structure.build(method, class_name);
    auto built = Clock::now();
    if (timings != nullptr) {
        timings->transform += built - started;
    }

    if (options.derive_cf) {
        ControlFlowPass control_flow(context, structure);
        control_flow.derive(method);
        auto derived = Clock::now();
        if (timings != nullptr) {
            timings->control_flow += derived - built;
        }

        if (options.derive_df) {
            auto before_df = Clock::now();
            if (options.fixpoint_df) {
                derive_data_flow_fixpoint(*graph);
            } else {
                derive_data_flow(*graph);
            }
            if (timings != nullptr) {
                timings->data_flow += Clock::now() - before_df;
            }
        }
    }

    return MethodResult{class_name, method.name, graph};
}

}  // namespace

std::vector<MethodResult> run_pipeline(const CompilationUnit& unit, const PipelineOptions& options,
                                       PhaseTimings* timings) {
    std::vector<MethodResult> results;
    for (const auto& cls : unit.classes) {
        for (const auto& method : cls->methods) {
            results.push_back(run_method(*method, cls->name, options, timings));
        }
    }
    return results;
}

MethodResult run_pipeline(const MethodDecl& method, const PipelineOptions& options,
                          PhaseTimings* timings, const std::string& class_name) {
    return run_method(method, class_name, options, timings);
}

}  // namespace flowgraph
