#include "flowgraph/structure_transform.hpp"

#include <algorithm>

#include "flowgraph/errors.hpp"
#include "flowgraph/render.hpp"

namespace flowgraph {

void ExpressionInfo::add_use(const VarDef* var) {
    if (std::find(used_variables.begin(), used_variables.end(), var) == used_variables.end()) {
        used_variables.push_back(var);
    }
}

void ExpressionInfo::add_uses(const ExpressionInfo& other) {
    for (const VarDef* var : other.used_variables) {
        add_use(var);
    }
}

// --- expression rules ------------------------------------------------------

namespace {

using ExprRule = TypedRule<Expression, ExpressionInfo>;

class ExpressionHub final : public ExprRule {
public:
    ExpressionHub() : ExprRule("ExpressionToInfo", AstKind::Expression) {}

    std::shared_ptr<ExpressionInfo> create(const Expression& input,
                                           TransformationContext&) override {
        throw Error(std::string("no expression rule registered for kind ") +
                    ast_kind_name(input.kind()));
    }
};

struct ExprRuleCommon {
    TransformationRule* hub = nullptr;
    ExpressionRules::ScopeLookup lookup;

    const VarDef* resolve(const std::string& name, SourcePos pos) const {
        const VarDef* var = lookup(name);
        if (var == nullptr) {
            throw UnboundVariable(pos, name);
        }
        return var;
    }

    std::shared_ptr<ExpressionInfo> child(TransformationContext& context,
                                          const Expression& e) const {
        return context.call<ExpressionInfo>(*hub, e);
    }
};

using ExprCommonPtr = std::shared_ptr<const ExprRuleCommon>;

class AssignmentToInfo final : public TypedRule<Assignment, ExpressionInfo> {
public:
    explicit AssignmentToInfo(ExprCommonPtr common)
            : TypedRule("AssignmentToInfo", AstKind::Assignment), common_(std::move(common)) {}

    std::shared_ptr<ExpressionInfo> create(const Assignment& input,
                                           TransformationContext& context) override {
        auto info = std::make_shared<ExpressionInfo>();
        const VarDef* target = common_->resolve(input.target, input.pos);
        auto value = common_->child(context, *input.value);
        info->text = compose_assignment(input.target, input.op, value->text);
        info->defined_variable = target;
        if (input.op != AssignOp::Assign) {
            // compound assignment reads its target
            info->add_use(target);
        }
        info->add_uses(*value);
        return info;
    }

private:
    ExprCommonPtr common_;
};

class BinaryToInfo final : public TypedRule<Binary, ExpressionInfo> {
public:
    explicit BinaryToInfo(ExprCommonPtr common)
            : TypedRule("BinaryToInfo", AstKind::Binary), common_(std::move(common)) {}

    std::shared_ptr<ExpressionInfo> create(const Binary& input,
                                           TransformationContext& context) override {
        auto info = std::make_shared<ExpressionInfo>();
        auto left = common_->child(context, *input.left);
        auto right = common_->child(context, *input.right);
        info->text = compose_binary(input.op, left->text, expr_precedence(*input.left),
                                    right->text, expr_precedence(*input.right));
        info->add_uses(*left);
        info->add_uses(*right);
        return info;
    }

private:
    ExprCommonPtr common_;
};

class UnaryToInfo final : public TypedRule<Unary, ExpressionInfo> {
public:
    explicit UnaryToInfo(ExprCommonPtr common)
            : TypedRule("UnaryToInfo", AstKind::Unary), common_(std::move(common)) {}

    std::shared_ptr<ExpressionInfo> create(const Unary& input,
                                           TransformationContext& context) override {
        auto info = std::make_shared<ExpressionInfo>();
        auto operand = common_->child(context, *input.operand);
        info->text = compose_unary(input.op, operand->text, expr_precedence(*input.operand));
        info->add_uses(*operand);
        if (input.op != UnaryOp::Neg && input.op != UnaryOp::Not) {
            // increment and decrement both read and write their variable
            if (input.operand->kind() != AstKind::VarRef) {
                throw Error("increment/decrement operand is not a variable");
            }
            const VarDef* var =
                    common_->resolve(static_cast<const VarRef&>(*input.operand).name, input.pos);
            info->defined_variable = var;
            info->add_use(var);
        }
        return info;
    }

private:
    ExprCommonPtr common_;
};

class VarRefToInfo final : public TypedRule<VarRef, ExpressionInfo> {
public:
    explicit VarRefToInfo(ExprCommonPtr common)
            : TypedRule("VarRefToInfo", AstKind::VarRef), common_(std::move(common)) {}

    std::shared_ptr<ExpressionInfo> create(const VarRef& input, TransformationContext&) override {
        auto info = std::make_shared<ExpressionInfo>();
        info->text = input.name;
        info->add_use(common_->resolve(input.name, input.pos));
        return info;
    }

private:
    ExprCommonPtr common_;
};

class IntLiteralToInfo final : public TypedRule<IntLiteral, ExpressionInfo> {
public:
    IntLiteralToInfo() : TypedRule("IntLiteralToInfo", AstKind::IntLiteral) {}

    std::shared_ptr<ExpressionInfo> create(const IntLiteral& input,
                                           TransformationContext&) override {
        auto info = std::make_shared<ExpressionInfo>();
        info->text = std::to_string(input.value);
        return info;
    }
};

class BoolLiteralToInfo final : public TypedRule<BoolLiteral, ExpressionInfo> {
public:
    BoolLiteralToInfo() : TypedRule("BoolLiteralToInfo", AstKind::BoolLiteral) {}

    std::shared_ptr<ExpressionInfo> create(const BoolLiteral& input,
                                           TransformationContext&) override {
        auto info = std::make_shared<ExpressionInfo>();
        info->text = input.value ? "true" : "false";
        return info;
    }
};

class CallToInfo final : public TypedRule<Call, ExpressionInfo> {
public:
    explicit CallToInfo(ExprCommonPtr common)
            : TypedRule("CallToInfo", AstKind::Call), common_(std::move(common)) {}

    std::shared_ptr<ExpressionInfo> create(const Call& input,
                                           TransformationContext& context) override {
        auto info = std::make_shared<ExpressionInfo>();
        std::vector<std::string> args;
        args.reserve(input.args.size());
        for (const auto& arg : input.args) {
            auto child = common_->child(context, *arg);
            args.push_back(child->text);
            info->add_uses(*child);
        }
        info->text = compose_call(input.name, args);
        return info;
    }

private:
    ExprCommonPtr common_;
};

}  // namespace

ExpressionRules::ExpressionRules(TransformationContext& context, ScopeLookup lookup) {
    auto common = std::make_shared<ExprRuleCommon>();
    common->lookup = std::move(lookup);

    auto hub = std::make_unique<ExpressionHub>();
    hub_ = hub.get();
    common->hub = hub_;

    rules_.push_back(std::move(hub));
    rules_.push_back(std::make_unique<AssignmentToInfo>(common));
    rules_.push_back(std::make_unique<BinaryToInfo>(common));
    rules_.push_back(std::make_unique<UnaryToInfo>(common));
    rules_.push_back(std::make_unique<VarRefToInfo>(common));
    rules_.push_back(std::make_unique<IntLiteralToInfo>());
    rules_.push_back(std::make_unique<BoolLiteralToInfo>());
    rules_.push_back(std::make_unique<CallToInfo>(common));

    for (std::size_t i = 1; i < rules_.size(); ++i) {
        rules_[i]->mark_instantiating_for(*hub_);
    }
    for (const auto& rule : rules_) {
        context.register_rule(*rule);
    }
}

ExpressionRules::~ExpressionRules() = default;

ExpressionInfo render_expression(const Expression& e, const Scope& scope) {
    TransformationContext context;
    ExpressionRules rules(context, [&scope](const std::string& name) -> const VarDef* {
        auto it = scope.find(name);
        return it != scope.end() ? it->second : nullptr;
    });
    return *context.call<ExpressionInfo>(rules.hub(), e);
}

// --- statement rules -------------------------------------------------------

struct StructurePass::State {
    FlowGraph* graph = nullptr;
    std::string class_name;
    Scope scope;
    TransformationRule* expr_hub = nullptr;
    TransformationRule* stmt_hub = nullptr;

    FlowGraph& current_graph() const {
        if (graph == nullptr) {
            throw Error("statement rule invoked outside of a method build");
        }
        return *graph;
    }
};

namespace {

using StmtRule = TypedRule<Statement, StatementInfo>;
using PassState = StructurePass::State;

std::vector<const AstNode*> one(const AstNode* node) {
    return node != nullptr ? std::vector<const AstNode*>{node} : std::vector<const AstNode*>{};
}

class StatementHub final : public StmtRule {
public:
    StatementHub() : StmtRule("StatementToInfo", AstKind::Statement) {}

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        throw Error(std::string("no statement rule registered for kind ") +
                    ast_kind_name(input.kind()));
    }
};

class MethodToGraph final : public TypedRule<MethodDecl, FlowGraph> {
public:
    explicit MethodToGraph(PassState& state)
            : TypedRule("MethodToGraph", AstKind::MethodDecl), state_(state) {
        require_each<StatementInfo>(
                *state_.stmt_hub,
                [](const MethodDecl& m) { return one(m.body.get()); });
    }

    std::shared_ptr<FlowGraph> create(const MethodDecl& input, TransformationContext&) override {
        auto graph = std::make_shared<FlowGraph>(state_.class_name, input.name);
        state_.graph = graph.get();
        state_.scope.clear();

        FlowInstr& entry = graph->new_instr(InstrKind::Method, method_label(input.name));
        graph->set_method_instr(&entry);
        for (const auto& param : input.params) {
            if (state_.scope.count(param.name) != 0) {
                throw DuplicateDeclaration(input.pos, param.name);
            }
            const VarDef& var = graph->new_var(param.name, VarOrigin::Param);
            state_.scope[param.name] = &var;
            // parameters are defined on method entry
            entry.add_def(&var);
        }
        return graph;
    }

    void apply(const MethodDecl&, FlowGraph& graph, TransformationContext&) override {
        // created after the body so the exit carries the highest id
        FlowInstr& exit = graph.new_instr(InstrKind::Exit, exit_label());
        graph.set_exit_instr(&exit);
    }

private:
    PassState& state_;
};

class BlockToInfo final : public StmtRule {
public:
    explicit BlockToInfo(PassState& state) : StmtRule("BlockToInfo", AstKind::Block) {
        require_each<StatementInfo>(
                *state.stmt_hub,
                [](const Statement& s) {
                    std::vector<const AstNode*> nodes;
                    for (const auto& child : static_cast<const Block&>(s).statements) {
                        nodes.push_back(child.get());
                    }
                    return nodes;
                },
                [](StatementInfo& info, StatementInfo& child) {
                    info.children.push_back(&child);
                });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        return info;
    }
};

class LocalVarDeclToInfo final : public StmtRule {
public:
    explicit LocalVarDeclToInfo(PassState& state)
            : StmtRule("LocalVarDeclToInfo", AstKind::LocalVarDecl), state_(state) {
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) {
                    return one(static_cast<const LocalVarDecl&>(s).init.get());
                },
                [](StatementInfo& info, ExpressionInfo& init) {
                    auto& decl = static_cast<const LocalVarDecl&>(*info.stmt);
                    info.instr->set_txt(decl_text(decl.type, decl.name, &init.text));
                    for (const VarDef* var : init.used_variables) {
                        info.instr->add_use(var);
                    }
                });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto& decl = static_cast<const LocalVarDecl&>(input);
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        info->instr = &state_.current_graph().new_instr(
                InstrKind::Simple, decl_text(decl.type, decl.name, nullptr));
        return info;
    }

    void apply(const Statement& input, StatementInfo& info, TransformationContext&) override {
        // registered after the initializer was rendered: the declared name
        // is not in scope inside its own initializer
        auto& decl = static_cast<const LocalVarDecl&>(input);
        if (state_.scope.count(decl.name) != 0) {
            throw DuplicateDeclaration(decl.pos, decl.name);
        }
        const VarDef& var = state_.current_graph().new_var(decl.name, VarOrigin::Local);
        state_.scope[decl.name] = &var;
        info.instr->add_def(&var);
    }

private:
    PassState& state_;
};

class ExprStmtToInfo final : public StmtRule {
public:
    explicit ExprStmtToInfo(PassState& state)
            : StmtRule("ExprStmtToInfo", AstKind::ExprStmt), state_(state) {
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) { return one(static_cast<const ExprStmt&>(s).expr.get()); },
                [](StatementInfo& info, ExpressionInfo& expr) {
                    info.instr->set_txt(expr.text);
                    if (expr.defined_variable != nullptr) {
                        info.instr->add_def(expr.defined_variable);
                    }
                    for (const VarDef* var : expr.used_variables) {
                        info.instr->add_use(var);
                    }
                });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        info->instr = &state_.current_graph().new_instr(InstrKind::Simple, "");
        return info;
    }

private:
    PassState& state_;
};

// fills a condition instruction from the rendered expression
void fill_condition(FlowInstr& instr, const ExpressionInfo& cond) {
    instr.set_txt(cond.text);
    if (cond.defined_variable != nullptr) {
        instr.add_def(cond.defined_variable);
    }
    for (const VarDef* var : cond.used_variables) {
        instr.add_use(var);
    }
}

class IfToInfo final : public StmtRule {
public:
    explicit IfToInfo(PassState& state) : StmtRule("IfToInfo", AstKind::If), state_(state) {
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) { return one(static_cast<const If&>(s).cond.get()); },
                [this](StatementInfo& info, ExpressionInfo& cond) {
                    info.instr = &state_.current_graph().new_instr(InstrKind::Expr, "");
                    fill_condition(*info.instr, cond);
                });
        require_each<StatementInfo>(
                *state_.stmt_hub,
                [](const Statement& s) { return one(static_cast<const If&>(s).then_branch.get()); },
                [](StatementInfo& info, StatementInfo& child) { info.then_branch = &child; });
        require_each<StatementInfo>(
                *state_.stmt_hub,
                [](const Statement& s) { return one(static_cast<const If&>(s).else_branch.get()); },
                [](StatementInfo& info, StatementInfo& child) { info.else_branch = &child; });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        return info;
    }

private:
    PassState& state_;
};

class WhileToInfo final : public StmtRule {
public:
    explicit WhileToInfo(PassState& state) : StmtRule("WhileToInfo", AstKind::While), state_(state) {
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) { return one(static_cast<const While&>(s).cond.get()); },
                [this](StatementInfo& info, ExpressionInfo& cond) {
                    info.instr = &state_.current_graph().new_instr(InstrKind::Expr, "");
                    fill_condition(*info.instr, cond);
                });
        require_each<StatementInfo>(
                *state_.stmt_hub,
                [](const Statement& s) { return one(static_cast<const While&>(s).body.get()); },
                [](StatementInfo& info, StatementInfo& child) { info.body = &child; });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        return info;
    }

private:
    PassState& state_;
};

class ForToInfo final : public StmtRule {
public:
    explicit ForToInfo(PassState& state) : StmtRule("ForToInfo", AstKind::For), state_(state) {
        require_each<StatementInfo>(
                *state_.stmt_hub,
                [](const Statement& s) { return one(static_cast<const For&>(s).init.get()); },
                [](StatementInfo& info, StatementInfo& child) { info.init = &child; });
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) { return one(static_cast<const For&>(s).cond.get()); },
                [this](StatementInfo& info, ExpressionInfo& cond) {
                    info.instr = &state_.current_graph().new_instr(InstrKind::Expr, "");
                    fill_condition(*info.instr, cond);
                });
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) { return one(static_cast<const For&>(s).update.get()); },
                [this](StatementInfo& info, ExpressionInfo& update) {
                    info.update_instr = &state_.current_graph().new_instr(InstrKind::Simple, "");
                    info.update_instr->set_txt(update.text);
                    if (update.defined_variable != nullptr) {
                        info.update_instr->add_def(update.defined_variable);
                    }
                    for (const VarDef* var : update.used_variables) {
                        info.update_instr->add_use(var);
                    }
                });
        require_each<StatementInfo>(
                *state_.stmt_hub,
                [](const Statement& s) { return one(static_cast<const For&>(s).body.get()); },
                [](StatementInfo& info, StatementInfo& child) { info.body = &child; });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        return info;
    }

private:
    PassState& state_;
};

class ReturnToInfo final : public StmtRule {
public:
    explicit ReturnToInfo(PassState& state) : StmtRule("ReturnToInfo", AstKind::Return), state_(state) {
        require_each<ExpressionInfo>(
                *state_.expr_hub,
                [](const Statement& s) { return one(static_cast<const Return&>(s).value.get()); },
                [](StatementInfo& info, ExpressionInfo& value) {
                    info.instr->set_txt(return_text(&value.text));
                    if (value.defined_variable != nullptr) {
                        info.instr->add_def(value.defined_variable);
                    }
                    for (const VarDef* var : value.used_variables) {
                        info.instr->add_use(var);
                    }
                });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        info->instr = &state_.current_graph().new_instr(InstrKind::Return, return_text(nullptr));
        return info;
    }

private:
    PassState& state_;
};

class BreakToInfo final : public StmtRule {
public:
    explicit BreakToInfo(PassState& state) : StmtRule("BreakToInfo", AstKind::Break), state_(state) {}

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto& stmt = static_cast<const Break&>(input);
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        info->label = stmt.label;
        info->instr =
                &state_.current_graph().new_instr(InstrKind::Break, jump_text("break", stmt.label));
        return info;
    }

private:
    PassState& state_;
};

class ContinueToInfo final : public StmtRule {
public:
    explicit ContinueToInfo(PassState& state)
            : StmtRule("ContinueToInfo", AstKind::Continue), state_(state) {}

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto& stmt = static_cast<const Continue&>(input);
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        info->label = stmt.label;
        info->instr = &state_.current_graph().new_instr(InstrKind::Continue,
                                                        jump_text("continue", stmt.label));
        return info;
    }

private:
    PassState& state_;
};

class LabeledToInfo final : public StmtRule {
public:
    explicit LabeledToInfo(PassState& state) : StmtRule("LabeledToInfo", AstKind::Labeled) {
        require_each<StatementInfo>(
                *state.stmt_hub,
                [](const Statement& s) { return one(static_cast<const Labeled&>(s).stmt.get()); },
                [](StatementInfo& info, StatementInfo& child) { info.body = &child; });
    }

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        info->label = static_cast<const Labeled&>(input).label;
        return info;
    }
};

class EmptyToInfo final : public StmtRule {
public:
    EmptyToInfo() : StmtRule("EmptyToInfo", AstKind::Empty) {}

    std::shared_ptr<StatementInfo> create(const Statement& input, TransformationContext&) override {
        auto info = std::make_shared<StatementInfo>();
        info->stmt = &input;
        return info;
    }
};

}  // namespace

StructurePass::StructurePass(TransformationContext& context)
        : context_(&context), state_(std::make_unique<State>()) {
    expr_rules_ = std::make_unique<ExpressionRules>(
            context, [state = state_.get()](const std::string& name) -> const VarDef* {
                auto it = state->scope.find(name);
                return it != state->scope.end() ? it->second : nullptr;
            });
    state_->expr_hub = &expr_rules_->hub();

    auto hub = std::make_unique<StatementHub>();
    stmt_hub_ = hub.get();
    state_->stmt_hub = stmt_hub_;
    rules_.push_back(std::move(hub));

    auto method = std::make_unique<MethodToGraph>(*state_);
    method_rule_ = method.get();
    rules_.push_back(std::move(method));

    rules_.push_back(std::make_unique<BlockToInfo>(*state_));
    rules_.push_back(std::make_unique<LocalVarDeclToInfo>(*state_));
    rules_.push_back(std::make_unique<ExprStmtToInfo>(*state_));
    rules_.push_back(std::make_unique<IfToInfo>(*state_));
    rules_.push_back(std::make_unique<WhileToInfo>(*state_));
    rules_.push_back(std::make_unique<ForToInfo>(*state_));
    rules_.push_back(std::make_unique<ReturnToInfo>(*state_));
    rules_.push_back(std::make_unique<BreakToInfo>(*state_));
    rules_.push_back(std::make_unique<ContinueToInfo>(*state_));
    rules_.push_back(std::make_unique<LabeledToInfo>(*state_));
    rules_.push_back(std::make_unique<EmptyToInfo>());

    for (const auto& rule : rules_) {
        if (rule.get() != stmt_hub_ && rule.get() != method_rule_) {
            rule->mark_instantiating_for(*stmt_hub_);
        }
        context.register_rule(*rule);
    }
}

StructurePass::~StructurePass() = default;

TransformationRule& StructurePass::expression_hub() const { return expr_rules_->hub(); }

std::shared_ptr<FlowGraph> StructurePass::build(const MethodDecl& method, std::string class_name) {
    state_->class_name = std::move(class_name);
    return context_->call<FlowGraph>(*method_rule_, method);
}

}  // namespace flowgraph
