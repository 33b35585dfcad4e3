#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowgraph/ast.hpp"
#include "flowgraph/flow_model.hpp"
#include "flowgraph/transform_engine.hpp"

namespace flowgraph {

// What the data-flow tasks need to know about an expression: its rendered
// text, the variable it defines (assignments and ++/-- only), and the
// variables it reads.
struct ExpressionInfo {
    std::string text;
    const VarDef* defined_variable = nullptr;
    std::vector<const VarDef*> used_variables;

    void add_use(const VarDef* var);
    void add_uses(const ExpressionInfo& other);
};

// Helper output of the statement rules; the control-flow pass picks these
// up through the trace.
struct StatementInfo {
    const Statement* stmt = nullptr;
    // the statement's own instruction, or the condition instruction of an
    // if/while/for; null for block, labeled, empty, and condition-less for
    FlowInstr* instr = nullptr;
    StatementInfo* init = nullptr;         // for
    FlowInstr* update_instr = nullptr;     // for
    StatementInfo* body = nullptr;         // while/for body, labeled inner
    StatementInfo* then_branch = nullptr;  // if
    StatementInfo* else_branch = nullptr;  // if
    std::vector<StatementInfo*> children;  // block
    std::string label;                     // labeled
};

// The expression-to-info rules: a hub rule for Expression plus one
// instantiating rule per concrete expression kind.
class ExpressionRules {
public:
    using ScopeLookup = std::function<const VarDef*(const std::string&)>;

    ExpressionRules(TransformationContext& context, ScopeLookup lookup);
    ~ExpressionRules();

    TransformationRule& hub() const { return *hub_; }

private:
    std::vector<std::unique_ptr<TransformationRule>> rules_;
    TransformationRule* hub_ = nullptr;
};

using Scope = std::unordered_map<std::string, const VarDef*>;

// Runs the expression rules against e in a one-off context.
// Throws UnboundVariable when an identifier is missing from scope.
ExpressionInfo render_expression(const Expression& e, const Scope& scope);

// Builds structure graphs: a method node, an exit node, one instruction
// per non-structural statement in document order, txt labels, def/use
// links, and no edges. All node creation goes through the rule engine, so
// repeated builds of one method in one context yield the same graph.
class StructurePass {
public:
    explicit StructurePass(TransformationContext& context);
    ~StructurePass();

    StructurePass(const StructurePass&) = delete;
    StructurePass& operator=(const StructurePass&) = delete;

    std::shared_ptr<FlowGraph> build(const MethodDecl& method, std::string class_name = "");

    TransformationContext& context() const { return *context_; }
    TransformationRule& method_rule() const { return *method_rule_; }
    TransformationRule& statement_hub() const { return *stmt_hub_; }
    TransformationRule& expression_hub() const;

    struct State;  // shared with the rule implementations

private:
    TransformationContext* context_;
    std::unique_ptr<State> state_;
    std::unique_ptr<ExpressionRules> expr_rules_;
    std::vector<std::unique_ptr<TransformationRule>> rules_;
    TransformationRule* method_rule_ = nullptr;
    TransformationRule* stmt_hub_ = nullptr;
};

}  // namespace flowgraph
