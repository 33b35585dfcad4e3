#include "flowgraph/flow_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "flowgraph/errors.hpp"

namespace flowgraph {

const char* instr_kind_name(InstrKind k) {
    switch (k) {
        case InstrKind::Method: return "method";
        case InstrKind::Exit: return "exit";
        case InstrKind::Simple: return "simple";
        case InstrKind::Expr: return "expr";
        case InstrKind::Return: return "return";
        case InstrKind::Break: return "break";
        case InstrKind::Continue: return "continue";
        case InstrKind::Label: return "label";
    }
    return "?";
}

namespace {

template <typename T>
bool contains(const std::vector<T*>& items, const T* item) {
    return std::find(items.begin(), items.end(), item) != items.end();
}

template <typename T>
bool contains(const std::vector<const T*>& items, const T* item) {
    return std::find(items.begin(), items.end(), item) != items.end();
}

}  // namespace

void FlowInstr::add_def(const VarDef* var) {
    if (!contains(defs_, var)) {
        defs_.push_back(var);
    }
}

void FlowInstr::add_use(const VarDef* var) {
    if (!contains(uses_, var)) {
        uses_.push_back(var);
    }
}

bool FlowInstr::defines(const VarDef* var) const { return contains(defs_, var); }

bool FlowInstr::uses_var(const VarDef* var) const { return contains(uses_, var); }

FlowInstr& FlowGraph::new_instr(InstrKind kind, std::string txt) {
    return new_instr_with_id(next_id_, kind, std::move(txt));
}

FlowInstr& FlowGraph::new_instr_with_id(int id, InstrKind kind, std::string txt) {
    instrs_.push_back(std::make_unique<FlowInstr>(*this, id, kind, std::move(txt)));
    next_id_ = std::max(next_id_, id + 1);
    return *instrs_.back();
}

const VarDef& FlowGraph::new_var(const std::string& name, VarOrigin origin) {
    vars_.push_back(std::make_unique<VarDef>(VarDef{name, origin}));
    return *vars_.back();
}

const VarDef* FlowGraph::find_var(const std::string& name) const {
    for (const auto& var : vars_) {
        if (var->name == name) {
            return var.get();
        }
    }
    return nullptr;
}

FlowInstr* FlowGraph::find_instr(int id) const {
    for (const auto& instr : instrs_) {
        if (instr->id() == id) {
            return instr.get();
        }
    }
    return nullptr;
}

std::size_t FlowGraph::cf_edge_count() const {
    std::size_t n = 0;
    for (const auto& instr : instrs_) {
        n += instr->cf_next().size();
    }
    return n;
}

std::size_t FlowGraph::df_edge_count() const {
    std::size_t n = 0;
    for (const auto& instr : instrs_) {
        n += instr->df_next().size();
    }
    return n;
}

void link_cf(FlowInstr& source, FlowInstr& target) {
    if (&source.graph() != &target.graph()) {
        throw CrossGraphLink();
    }
    if (contains(source.cf_next_, &target)) {
        return;
    }
    source.cf_next_.push_back(&target);
    target.cf_prev_.push_back(&source);
}

void link_df(FlowInstr& source, FlowInstr& target) {
    if (&source.graph() != &target.graph()) {
        throw CrossGraphLink();
    }
    if (contains(source.df_next_, &target)) {
        return;
    }
    source.df_next_.push_back(&target);
}

void audit_graph(const FlowGraph& graph) {
    auto violation = [&](const FlowInstr& instr, const std::string& what) {
        throw Error("graph invariant violated at instr " + std::to_string(instr.id()) + " (" +
                    instr.txt() + "): " + what);
    };

    if (graph.method_instr() == nullptr || graph.exit_instr() == nullptr) {
        throw Error("graph is missing its method or exit node");
    }

    std::unordered_set<int> ids;
    for (const auto& instr : graph.instrs()) {
        if (!ids.insert(instr->id()).second) {
            violation(*instr, "duplicate id");
        }
        if (instr->txt().empty()) {
            violation(*instr, "empty txt");
        }
        if (&instr->graph() != &graph) {
            violation(*instr, "foreign graph pointer");
        }

        for (FlowInstr* next : instr->cf_next()) {
            if (!contains(next->cf_prev(), instr.get())) {
                violation(*instr, "cf_next target lacks the inverse cf_prev entry");
            }
        }
        for (FlowInstr* prev : instr->cf_prev()) {
            if (!contains(prev->cf_next(), instr.get())) {
                violation(*instr, "cf_prev source lacks the forward cf_next entry");
            }
        }

        switch (instr->instr_kind()) {
            case InstrKind::Exit:
                if (!instr->cf_next().empty()) {
                    violation(*instr, "exit node has successors");
                }
                break;
            case InstrKind::Expr:
                // both branch targets may coincide (e.g. an if with two
                // empty branches); link_cf deduplicates that edge
                if (instr->cf_next().size() > 2) {
                    violation(*instr, "condition with more than two successors");
                }
                break;
            default:
                if (instr->cf_next().size() > 1) {
                    violation(*instr, "non-branching instruction with several successors");
                }
                break;
        }

        if (instr->instr_kind() != InstrKind::Method && instr->defs().size() > 1) {
            violation(*instr, "more than one defined variable");
        }
    }
}

}  // namespace flowgraph
