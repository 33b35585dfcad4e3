#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace flowgraph {

enum class VarOrigin : std::uint8_t { Param, Local };

struct VarDef {
    std::string name;
    VarOrigin origin = VarOrigin::Local;
};

enum class InstrKind : std::uint8_t {
    Method,
    Exit,
    Simple,
    Expr,
    Return,
    Break,
    Continue,
    Label,
};

const char* instr_kind_name(InstrKind k);

class FlowGraph;

// One node of the flow-graph model: an executable statement or a
// condition expression. cf_prev is maintained as the inverse of cf_next
// by link_cf and is never written directly.
class FlowInstr {
public:
    FlowInstr(FlowGraph& graph, int id, InstrKind kind, std::string txt)
            : graph_(&graph), id_(id), kind_(kind), txt_(std::move(txt)) {}

    FlowInstr(const FlowInstr&) = delete;
    FlowInstr& operator=(const FlowInstr&) = delete;

    FlowGraph& graph() const { return *graph_; }
    int id() const { return id_; }
    InstrKind instr_kind() const { return kind_; }
    const std::string& txt() const { return txt_; }
    void set_txt(std::string txt) { txt_ = std::move(txt); }

    const std::vector<FlowInstr*>& cf_next() const { return cf_next_; }
    const std::vector<FlowInstr*>& cf_prev() const { return cf_prev_; }
    const std::vector<FlowInstr*>& df_next() const { return df_next_; }

    const std::vector<const VarDef*>& defs() const { return defs_; }
    const std::vector<const VarDef*>& uses() const { return uses_; }

    void add_def(const VarDef* var);
    void add_use(const VarDef* var);
    bool defines(const VarDef* var) const;
    bool uses_var(const VarDef* var) const;

private:
    friend void link_cf(FlowInstr& source, FlowInstr& target);
    friend void link_df(FlowInstr& source, FlowInstr& target);

    FlowGraph* graph_;
    int id_;
    InstrKind kind_;
    std::string txt_;
    std::vector<FlowInstr*> cf_next_;
    std::vector<FlowInstr*> cf_prev_;
    std::vector<FlowInstr*> df_next_;
    std::vector<const VarDef*> defs_;
    std::vector<const VarDef*> uses_;
};

// The flow graph of one method: a method entry node, an exit node, and
// one instruction per non-structural statement, in document order.
class FlowGraph {
public:
    FlowGraph(std::string class_name, std::string method_name)
            : class_name_(std::move(class_name)), method_name_(std::move(method_name)) {}

    FlowGraph(const FlowGraph&) = delete;
    FlowGraph& operator=(const FlowGraph&) = delete;

    const std::string& class_name() const { return class_name_; }
    const std::string& method_name() const { return method_name_; }

    FlowInstr& new_instr(InstrKind kind, std::string txt);
    // Only the deserializer restores explicit ids.
    FlowInstr& new_instr_with_id(int id, InstrKind kind, std::string txt);

    const VarDef& new_var(const std::string& name, VarOrigin origin);
    const VarDef* find_var(const std::string& name) const;

    void set_method_instr(FlowInstr* instr) { method_ = instr; }
    void set_exit_instr(FlowInstr* instr) { exit_ = instr; }
    FlowInstr* method_instr() const { return method_; }
    FlowInstr* exit_instr() const { return exit_; }

    const std::vector<std::unique_ptr<FlowInstr>>& instrs() const { return instrs_; }
    const std::vector<std::unique_ptr<VarDef>>& vars() const { return vars_; }

    FlowInstr* find_instr(int id) const;

    std::size_t cf_edge_count() const;
    std::size_t df_edge_count() const;

private:
    std::string class_name_;
    std::string method_name_;
    std::vector<std::unique_ptr<FlowInstr>> instrs_;
    std::vector<std::unique_ptr<VarDef>> vars_;
    FlowInstr* method_ = nullptr;
    FlowInstr* exit_ = nullptr;
    int next_id_ = 0;
};

// Appends target to source.cf_next and source to target.cf_prev.
// Idempotent. Throws CrossGraphLink when the instructions belong to
// different graphs.
void link_cf(FlowInstr& source, FlowInstr& target);

// Appends target to source.df_next. Idempotent, same-graph only.
void link_df(FlowInstr& source, FlowInstr& target);

// Checks the structural invariants (inverse cf links, id uniqueness,
// non-empty txt, exit has no successors, out-degree bounds, def arity).
// Throws Error with a description of the first violation.
void audit_graph(const FlowGraph& graph);

}  // namespace flowgraph
