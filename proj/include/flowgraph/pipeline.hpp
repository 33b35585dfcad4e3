#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include "flowgraph/ast.hpp"
#include "flowgraph/flow_model.hpp"

namespace flowgraph {

struct PipelineOptions {
    bool derive_cf = true;
    bool derive_df = true;
    bool fixpoint_df = false;
};

// The five phases of one run; read and write are filled by the caller.
struct PhaseTimings {
    std::chrono::nanoseconds read{0};
    std::chrono::nanoseconds transform{0};
    std::chrono::nanoseconds control_flow{0};
    std::chrono::nanoseconds data_flow{0};
    std::chrono::nanoseconds write{0};
};

struct MethodResult {
    std::string class_name;
    std::string method_name;
    std::shared_ptr<FlowGraph> graph;
};

// Runs structure transform, control-flow derivation, and data-flow
// derivation per method, each method in its own transformation context.
std::vector<MethodResult> run_pipeline(const CompilationUnit& unit, const PipelineOptions& options,
                                       PhaseTimings* timings = nullptr);

// Single-method convenience used by tests and the bench harness.
MethodResult run_pipeline(const MethodDecl& method, const PipelineOptions& options,
                          PhaseTimings* timings = nullptr, const std::string& class_name = "");

}  // namespace flowgraph
