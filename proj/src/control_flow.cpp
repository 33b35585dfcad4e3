#include "flowgraph/control_flow.hpp"

#include <algorithm>

#include "flowgraph/errors.hpp"

namespace flowgraph {

FlowInstr* ControlFlowInfo::successor_first() const {
    if (!successor_) {
        throw Error("control flow successor was never set");
    }
    return successor_();
}

const LoopFrame* ControlFlowState::find_loop(const std::string& label) const {
    if (loops_.empty()) {
        return nullptr;
    }
    if (label.empty()) {
        return &loops_.back();
    }
    for (auto it = loops_.rbegin(); it != loops_.rend(); ++it) {
        if (std::find(it->labels.begin(), it->labels.end(), label) != it->labels.end()) {
            return &*it;
        }
    }
    return nullptr;
}

namespace {

// --- info implementations -------------------------------------------------

// declarations, expression statements, and similar straight-line
// instructions: one edge to the successor's first instruction
class SimpleCfInfo final : public ControlFlowInfo {
public:
    explicit SimpleCfInfo(FlowInstr* instr) : instr_(instr) {}

    FlowInstr* first() override { return instr_; }

    void set_control_flow(ControlFlowState&) override { link_cf(*instr_, *successor_first()); }

private:
    FlowInstr* instr_;
};

class ReturnCfInfo final : public ControlFlowInfo {
public:
    explicit ReturnCfInfo(FlowInstr* instr) : instr_(instr) {}

    FlowInstr* first() override { return instr_; }

    void set_control_flow(ControlFlowState& state) override {
        link_cf(*instr_, *state.graph().exit_instr());
    }

private:
    FlowInstr* instr_;
};

class JumpCfInfo final : public ControlFlowInfo {
public:
    JumpCfInfo(FlowInstr* instr, std::string label, bool is_break)
            : instr_(instr), label_(std::move(label)), is_break_(is_break) {}

    FlowInstr* first() override { return instr_; }

    void set_control_flow(ControlFlowState& state) override {
        const LoopFrame* frame = state.find_loop(label_);
        if (frame == nullptr) {
            throw UnresolvedLabel({0, 0}, label_);
        }
        FlowInstr* target = is_break_ ? frame->break_target() : frame->continue_target();
        link_cf(*instr_, *target);
    }

private:
    FlowInstr* instr_;
    std::string label_;
    bool is_break_;
};

class EmptyCfInfo final : public ControlFlowInfo {
public:
    FlowInstr* first() override { return successor_first(); }

    void set_control_flow(ControlFlowState&) override {}
};

class BlockCfInfo final : public ControlFlowInfo {
public:
    void add_child(ControlFlowInfo* child) { children_.push_back(child); }

    void set_successor(InstrResolver successor) override {
        successor_ = std::move(successor);
        // chain the children: each one falls through to the next one's
        // first instruction, the last one to the block's successor
        InstrResolver next = successor_;
        for (auto it = children_.rbegin(); it != children_.rend(); ++it) {
            (*it)->set_successor(next);
            ControlFlowInfo* child = *it;
            next = [child]() { return child->first(); };
        }
    }

    FlowInstr* first() override {
        return children_.empty() ? successor_first() : children_.front()->first();
    }

    void set_control_flow(ControlFlowState& state) override {
        for (ControlFlowInfo* child : children_) {
            child->set_control_flow(state);
        }
    }

private:
    std::vector<ControlFlowInfo*> children_;
};

class IfCfInfo final : public ControlFlowInfo {
public:
    explicit IfCfInfo(FlowInstr* cond) : cond_(cond) {}

    void attach_then(ControlFlowInfo* info) { then_ = info; }
    void attach_else(ControlFlowInfo* info) { else_ = info; }

    void set_successor(InstrResolver successor) override {
        successor_ = std::move(successor);
        then_->set_successor(successor_);
        if (else_ != nullptr) {
            else_->set_successor(successor_);
        }
    }

    FlowInstr* first() override { return cond_; }

    void set_control_flow(ControlFlowState& state) override {
        link_cf(*cond_, *then_->first());  // true branch first
        link_cf(*cond_, else_ != nullptr ? *else_->first() : *successor_first());
        then_->set_control_flow(state);
        if (else_ != nullptr) {
            else_->set_control_flow(state);
        }
    }

private:
    FlowInstr* cond_;
    ControlFlowInfo* then_ = nullptr;
    ControlFlowInfo* else_ = nullptr;
};

class LoopCfInfo : public ControlFlowInfo {
public:
    void add_label(const std::string& label) override { labels_.push_back(label); }

protected:
    std::vector<std::string> labels_;
};

class WhileCfInfo final : public LoopCfInfo {
public:
    explicit WhileCfInfo(FlowInstr* cond) : cond_(cond) {}

    void attach_body(ControlFlowInfo* info) {
        body_ = info;
        // the body always falls back to the loop test
        body_->set_successor([cond = cond_]() { return cond; });
    }

    FlowInstr* first() override { return cond_; }

    void set_control_flow(ControlFlowState& state) override {
        link_cf(*cond_, *body_->first());
        link_cf(*cond_, *successor_first());
        state.push_loop(LoopFrame{labels_, [cond = cond_]() { return cond; }, successor_});
        body_->set_control_flow(state);
        state.pop_loop();
    }

private:
    FlowInstr* cond_;
    ControlFlowInfo* body_ = nullptr;
};

class ForCfInfo final : public LoopCfInfo {
public:
    ForCfInfo(FlowInstr* cond, FlowInstr* update) : cond_(cond), update_(update) {}

    void attach_init(ControlFlowInfo* info) {
        init_ = info;
        init_->set_successor([this]() { return iteration_head(); });
    }

    void attach_body(ControlFlowInfo* info) {
        body_ = info;
        body_->set_successor([this]() { return back_target(); });
    }

    FlowInstr* first() override { return init_ != nullptr ? init_->first() : iteration_head(); }

    void set_control_flow(ControlFlowState& state) override {
        if (init_ != nullptr) {
            init_->set_control_flow(state);
        }
        if (cond_ != nullptr) {
            link_cf(*cond_, *body_first_guarded());  // true branch first
            link_cf(*cond_, *successor_first());
        }
        if (update_ != nullptr) {
            link_cf(*update_, *iteration_head());
        }
        state.push_loop(
                LoopFrame{labels_, [this]() { return back_target(); }, successor_});
        body_->set_control_flow(state);
        state.pop_loop();
    }

private:
    // where one iteration starts: the test, or the body when the
    // condition is missing (a missing condition is constant true)
    FlowInstr* iteration_head() { return cond_ != nullptr ? cond_ : body_first_guarded(); }

    // where control goes after the body (and where continue jumps to)
    FlowInstr* back_target() { return update_ != nullptr ? update_ : iteration_head(); }

    // a condition-less loop whose body holds no instruction would resolve
    // its first instruction through itself; treat it as falling through
    FlowInstr* body_first_guarded() {
        if (resolving_) {
            return successor_first();
        }
        resolving_ = true;
        FlowInstr* result = body_->first();
        resolving_ = false;
        return result;
    }

    FlowInstr* cond_;
    FlowInstr* update_;
    ControlFlowInfo* init_ = nullptr;
    ControlFlowInfo* body_ = nullptr;
    bool resolving_ = false;
};

class LabeledCfInfo final : public ControlFlowInfo {
public:
    explicit LabeledCfInfo(std::string label) : label_(std::move(label)) {}

    void attach(ControlFlowInfo* inner) {
        inner_ = inner;
        inner_->add_label(label_);
    }

    void set_successor(InstrResolver successor) override { inner_->set_successor(std::move(successor)); }

    FlowInstr* first() override { return inner_->first(); }

    void set_control_flow(ControlFlowState& state) override { inner_->set_control_flow(state); }

    void add_label(const std::string& label) override { inner_->add_label(label); }

private:
    std::string label_;
    ControlFlowInfo* inner_ = nullptr;
};

class MethodCfInfo final : public ControlFlowInfo {
public:
    explicit MethodCfInfo(std::shared_ptr<FlowGraph> graph) : graph_(std::move(graph)) {}

    void attach_body(ControlFlowInfo* info) { body_ = info; }

    std::shared_ptr<FlowGraph> graph() const { return graph_; }

    FlowInstr* first() override { return graph_->method_instr(); }

    void set_control_flow(ControlFlowState& state) override {
        body_->set_successor([graph = graph_.get()]() { return graph->exit_instr(); });
        link_cf(*graph_->method_instr(), *body_->first());
        body_->set_control_flow(state);
    }

private:
    std::shared_ptr<FlowGraph> graph_;
    ControlFlowInfo* body_ = nullptr;
};

// --- rules -----------------------------------------------------------------

using CfRule = TypedRule<Statement, ControlFlowInfo>;

std::vector<const AstNode*> one(const AstNode* node) {
    return node != nullptr ? std::vector<const AstNode*>{node} : std::vector<const AstNode*>{};
}

// the structure pass output for a statement, via the trace
StatementInfo& structure_info(TransformationContext& context, StructurePass& structure,
                              const Statement& stmt) {
    auto traced = context.trace_lookup(structure.statement_hub(), stmt);
    if (!traced) {
        throw Error("structure pass has not transformed this statement yet");
    }
    return *std::static_pointer_cast<StatementInfo>(*traced);
}

class CfHub final : public CfRule {
public:
    CfHub() : CfRule("StatementToCfInfo", AstKind::Statement) {}

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext&) override {
        throw Error(std::string("no control flow rule registered for kind ") +
                    ast_kind_name(input.kind()));
    }
};

class MethodToCf final : public TypedRule<MethodDecl, ControlFlowInfo> {
public:
    MethodToCf(StructurePass& structure, TransformationRule& cf_hub)
            : TypedRule("MethodToCf", AstKind::MethodDecl), structure_(&structure) {
        require_each<ControlFlowInfo>(
                cf_hub, [](const MethodDecl& m) { return one(m.body.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<MethodCfInfo&>(info).attach_body(&child);
                });
    }

    std::shared_ptr<ControlFlowInfo> create(const MethodDecl& input,
                                            TransformationContext& context) override {
        auto traced = context.trace_lookup(structure_->method_rule(), input);
        if (!traced) {
            throw Error("structure pass has not built a graph for this method");
        }
        return std::make_shared<MethodCfInfo>(std::static_pointer_cast<FlowGraph>(*traced));
    }

private:
    StructurePass* structure_;
};

class SimpleToCf final : public CfRule {
public:
    SimpleToCf(std::string name, AstKind kind, StructurePass& structure)
            : CfRule(std::move(name), kind), structure_(&structure) {}

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext& context) override {
        return std::make_shared<SimpleCfInfo>(structure_info(context, *structure_, input).instr);
    }

private:
    StructurePass* structure_;
};

class ReturnToCf final : public CfRule {
public:
    explicit ReturnToCf(StructurePass& structure)
            : CfRule("ReturnToCf", AstKind::Return), structure_(&structure) {}

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext& context) override {
        return std::make_shared<ReturnCfInfo>(structure_info(context, *structure_, input).instr);
    }

private:
    StructurePass* structure_;
};

class JumpToCf final : public CfRule {
public:
    JumpToCf(std::string name, AstKind kind, StructurePass& structure, bool is_break)
            : CfRule(std::move(name), kind), structure_(&structure), is_break_(is_break) {}

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext& context) override {
        StatementInfo& info = structure_info(context, *structure_, input);
        return std::make_shared<JumpCfInfo>(info.instr, info.label, is_break_);
    }

private:
    StructurePass* structure_;
    bool is_break_;
};

class EmptyToCf final : public CfRule {
public:
    EmptyToCf() : CfRule("EmptyToCf", AstKind::Empty) {}

    std::shared_ptr<ControlFlowInfo> create(const Statement&, TransformationContext&) override {
        return std::make_shared<EmptyCfInfo>();
    }
};

class BlockToCf final : public CfRule {
public:
    explicit BlockToCf(TransformationRule& cf_hub) : CfRule("BlockToCf", AstKind::Block) {
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) {
                    std::vector<const AstNode*> nodes;
                    for (const auto& child : static_cast<const Block&>(s).statements) {
                        nodes.push_back(child.get());
                    }
                    return nodes;
                },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<BlockCfInfo&>(info).add_child(&child);
                });
    }

    std::shared_ptr<ControlFlowInfo> create(const Statement&, TransformationContext&) override {
        return std::make_shared<BlockCfInfo>();
    }
};

class IfToCf final : public CfRule {
public:
    IfToCf(StructurePass& structure, TransformationRule& cf_hub)
            : CfRule("IfToCf", AstKind::If), structure_(&structure) {
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) { return one(static_cast<const If&>(s).then_branch.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<IfCfInfo&>(info).attach_then(&child);
                });
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) { return one(static_cast<const If&>(s).else_branch.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<IfCfInfo&>(info).attach_else(&child);
                });
    }

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext& context) override {
        return std::make_shared<IfCfInfo>(structure_info(context, *structure_, input).instr);
    }

private:
    StructurePass* structure_;
};

class WhileToCf final : public CfRule {
public:
    WhileToCf(StructurePass& structure, TransformationRule& cf_hub)
            : CfRule("WhileToCf", AstKind::While), structure_(&structure) {
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) { return one(static_cast<const While&>(s).body.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<WhileCfInfo&>(info).attach_body(&child);
                });
    }

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext& context) override {
        return std::make_shared<WhileCfInfo>(structure_info(context, *structure_, input).instr);
    }

private:
    StructurePass* structure_;
};

class ForToCf final : public CfRule {
public:
    ForToCf(StructurePass& structure, TransformationRule& cf_hub)
            : CfRule("ForToCf", AstKind::For), structure_(&structure) {
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) { return one(static_cast<const For&>(s).init.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<ForCfInfo&>(info).attach_init(&child);
                });
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) { return one(static_cast<const For&>(s).body.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<ForCfInfo&>(info).attach_body(&child);
                });
    }

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext& context) override {
        StatementInfo& info = structure_info(context, *structure_, input);
        return std::make_shared<ForCfInfo>(info.instr, info.update_instr);
    }

private:
    StructurePass* structure_;
};

class LabeledToCf final : public CfRule {
public:
    explicit LabeledToCf(TransformationRule& cf_hub) : CfRule("LabeledToCf", AstKind::Labeled) {
        require_each<ControlFlowInfo>(
                cf_hub,
                [](const Statement& s) { return one(static_cast<const Labeled&>(s).stmt.get()); },
                [](ControlFlowInfo& info, ControlFlowInfo& child) {
                    static_cast<LabeledCfInfo&>(info).attach(&child);
                });
    }

    std::shared_ptr<ControlFlowInfo> create(const Statement& input,
                                            TransformationContext&) override {
        return std::make_shared<LabeledCfInfo>(static_cast<const Labeled&>(input).label);
    }
};

}  // namespace

ControlFlowPass::ControlFlowPass(TransformationContext& context, StructurePass& structure)
        : context_(&context), structure_(&structure) {
    auto hub = std::make_unique<CfHub>();
    stmt_hub_ = hub.get();
    rules_.push_back(std::move(hub));

    auto method = std::make_unique<MethodToCf>(structure, *stmt_hub_);
    method_rule_ = method.get();
    rules_.push_back(std::move(method));

    rules_.push_back(std::make_unique<BlockToCf>(*stmt_hub_));
    rules_.push_back(std::make_unique<SimpleToCf>("LocalVarDeclToCf", AstKind::LocalVarDecl, structure));
    rules_.push_back(std::make_unique<SimpleToCf>("ExprStmtToCf", AstKind::ExprStmt, structure));
    rules_.push_back(std::make_unique<IfToCf>(structure, *stmt_hub_));
    rules_.push_back(std::make_unique<WhileToCf>(structure, *stmt_hub_));
    rules_.push_back(std::make_unique<ForToCf>(structure, *stmt_hub_));
    rules_.push_back(std::make_unique<ReturnToCf>(structure));
    rules_.push_back(std::make_unique<JumpToCf>("BreakToCf", AstKind::Break, structure, true));
    rules_.push_back(std::make_unique<JumpToCf>("ContinueToCf", AstKind::Continue, structure, false));
    rules_.push_back(std::make_unique<LabeledToCf>(*stmt_hub_));
    rules_.push_back(std::make_unique<EmptyToCf>());

    for (const auto& rule : rules_) {
        if (rule.get() != stmt_hub_ && rule.get() != method_rule_) {
            rule->mark_instantiating_for(*stmt_hub_);
        }
        context.register_rule(*rule);
    }
}

ControlFlowPass::~ControlFlowPass() = default;

std::shared_ptr<FlowGraph> ControlFlowPass::derive(const MethodDecl& method) {
    auto info = context_->call<ControlFlowInfo>(*method_rule_, method);
    auto& method_info = static_cast<MethodCfInfo&>(*info);
    ControlFlowState state(*method_info.graph());
    method_info.set_control_flow(state);
    return method_info.graph();
}

}  // namespace flowgraph
