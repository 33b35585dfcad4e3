#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "flowgraph/ast.hpp"
#include "flowgraph/flow_model.hpp"
#include "flowgraph/structure_transform.hpp"
#include "flowgraph/transform_engine.hpp"

namespace flowgraph {

class ControlFlowState;

using InstrResolver = std::function<FlowInstr*()>;

// Per-statement control-flow behaviour: the first flow instruction on
// entering the statement (which may lie outside the statement, e.g. for
// empty blocks), the successor resolution, and the edge-setting procedure.
class ControlFlowInfo {
public:
    virtual ~ControlFlowInfo() = default;

    // Called by the enclosing statement; resolution is lazy so that loop
    // back edges and jump targets resolve correctly.
    virtual void set_successor(InstrResolver successor) { successor_ = std::move(successor); }

    virtual FlowInstr* first() = 0;
    virtual void set_control_flow(ControlFlowState& state) = 0;

    // Labels attach to loops; other statements ignore them.
    virtual void add_label(const std::string& label) { (void)label; }

protected:
    FlowInstr* successor_first() const;

    InstrResolver successor_;
};

// Stack entry for one loop: where continue and break jump to.
struct LoopFrame {
    std::vector<std::string> labels;
    InstrResolver continue_target;
    InstrResolver break_target;
};

class ControlFlowState {
public:
    explicit ControlFlowState(FlowGraph& graph) : graph_(&graph) {}

    FlowGraph& graph() const { return *graph_; }

    void push_loop(LoopFrame frame) { loops_.push_back(std::move(frame)); }
    void pop_loop() { loops_.pop_back(); }

    // innermost loop when label is empty, else the nearest loop carrying
    // the label; null when there is none
    const LoopFrame* find_loop(const std::string& label) const;

private:
    FlowGraph* graph_;
    std::vector<LoopFrame> loops_;
};

// Derives cfNext/cfPrev edges over the structure graph of a method. The
// statement rules return ControlFlowInfo implementations; executing the
// method's SetControlFlow wires the whole graph.
class ControlFlowPass {
public:
    ControlFlowPass(TransformationContext& context, StructurePass& structure);
    ~ControlFlowPass();

    ControlFlowPass(const ControlFlowPass&) = delete;
    ControlFlowPass& operator=(const ControlFlowPass&) = delete;

    // Requires StructurePass::build to have run for the method in the
    // shared context.
    std::shared_ptr<FlowGraph> derive(const MethodDecl& method);

    TransformationRule& statement_hub() const { return *stmt_hub_; }

private:
    TransformationContext* context_;
    StructurePass* structure_;
    std::vector<std::unique_ptr<TransformationRule>> rules_;
    TransformationRule* method_rule_ = nullptr;
    TransformationRule* stmt_hub_ = nullptr;
};

}  // namespace flowgraph
