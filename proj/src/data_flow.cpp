#include "flowgraph/data_flow.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace flowgraph {

namespace {

void sort_edges(std::vector<DefUseEdge>& edges) {
    std::sort(edges.begin(), edges.end(), [](const DefUseEdge& a, const DefUseEdge& b) {
        if (std::get<0>(a)->id() != std::get<0>(b)->id()) {
            return std::get<0>(a)->id() < std::get<0>(b)->id();
        }
        if (std::get<1>(a)->id() != std::get<1>(b)->id()) {
            return std::get<1>(a)->id() < std::get<1>(b)->id();
        }
        return std::get<2>(a)->name < std::get<2>(b)->name;
    });
}

std::unordered_map<const FlowInstr*, std::size_t> index_instrs(const FlowGraph& graph) {
    std::unordered_map<const FlowInstr*, std::size_t> index;
    index.reserve(graph.instrs().size());
    for (std::size_t i = 0; i < graph.instrs().size(); ++i) {
        index.emplace(graph.instrs()[i].get(), i);
    }
    return index;
}

}  // namespace

std::vector<DefUseEdge> traversal_def_use_edges(const FlowGraph& graph) {
    std::vector<DefUseEdge> edges;
    const auto index = index_instrs(graph);
    const std::size_t n = graph.instrs().size();

    // epoch-stamped visited marks, reused across walks
    std::vector<std::uint32_t> visited(n, 0);
    std::uint32_t epoch = 0;
    std::vector<const FlowInstr*> stack;

    for (const auto& def_instr : graph.instrs()) {
        for (const VarDef* var : def_instr->defs()) {
            ++epoch;
            stack.clear();
            // the walk starts at the successors: a definition does not
            // feed the uses of its own instruction
            for (auto it = def_instr->cf_next().rbegin(); it != def_instr->cf_next().rend(); ++it) {
                std::size_t i = index.at(*it);
                if (visited[i] != epoch) {
                    visited[i] = epoch;
                    stack.push_back(*it);
                }
            }
            while (!stack.empty()) {
                const FlowInstr* instr = stack.back();
                stack.pop_back();
                if (instr->uses_var(var)) {
                    edges.emplace_back(def_instr.get(), instr, var);
                }
                if (instr->defines(var)) {
                    continue;  // the definition loses scope here
                }
                for (auto it = instr->cf_next().rbegin(); it != instr->cf_next().rend(); ++it) {
                    std::size_t i = index.at(*it);
                    if (visited[i] != epoch) {
                        visited[i] = epoch;
                        stack.push_back(*it);
                    }
                }
            }
        }
    }
    sort_edges(edges);
    return edges;
}

std::vector<DefUseEdge> oracle_reaching_defs(const FlowGraph& graph) {
    const auto index = index_instrs(graph);
    const std::size_t n = graph.instrs().size();

    // number the definitions
    struct DefSite {
        const FlowInstr* instr;
        const VarDef* var;
    };
    std::vector<DefSite> defs;
    std::unordered_map<const VarDef*, std::vector<std::size_t>> defs_of_var;
    for (const auto& instr : graph.instrs()) {
        for (const VarDef* var : instr->defs()) {
            defs_of_var[var].push_back(defs.size());
            defs.push_back(DefSite{instr.get(), var});
        }
    }

    // IN/OUT as sorted vectors of definition indices: on realistic code
    // only a handful of definitions are live at a time, so sparse sets
    // beat definition-count-wide bit rows by a large margin
    using DefIdx = std::uint32_t;
    std::vector<std::vector<DefIdx>> out(n);
    std::vector<std::vector<DefIdx>> gen_of(n);
    for (std::size_t i = 0; i < defs.size(); ++i) {
        gen_of[index.at(defs[i].instr)].push_back(static_cast<DefIdx>(i));
    }

    std::vector<DefIdx> in_set;
    std::vector<DefIdx> merge_scratch;
    auto compute_in = [&](std::size_t i) {
        in_set.clear();
        for (const FlowInstr* pred : graph.instrs()[i]->cf_prev()) {
            const auto& pred_out = out[index.at(pred)];
            if (pred_out.empty()) {
                continue;
            }
            if (in_set.empty()) {
                in_set = pred_out;
                continue;
            }
            merge_scratch.clear();
            std::set_union(in_set.begin(), in_set.end(), pred_out.begin(), pred_out.end(),
                           std::back_inserter(merge_scratch));
            in_set.swap(merge_scratch);
        }
    };

    // document order approximates reverse postorder, so straight-line code
    // stabilizes after a single sweep; loops add one round per nesting level
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            const FlowInstr& instr = *graph.instrs()[i];
            compute_in(i);
            if (!instr.defs().empty()) {
                std::erase_if(in_set, [&](DefIdx idx) {
                    return instr.defines(defs[idx].var);
                });
                for (DefIdx idx : gen_of[i]) {
                    in_set.insert(std::lower_bound(in_set.begin(), in_set.end(), idx), idx);
                }
            }
            if (in_set != out[i]) {
                out[i].swap(in_set);
                changed = true;
            }
        }
    }

    std::vector<DefUseEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const FlowInstr* use_instr = graph.instrs()[i].get();
        if (use_instr->uses().empty()) {
            continue;
        }
        compute_in(i);
        for (DefIdx idx : in_set) {
            if (use_instr->uses_var(defs[idx].var)) {
                edges.emplace_back(defs[idx].instr, use_instr, defs[idx].var);
            }
        }
    }
    sort_edges(edges);
    return edges;
}

namespace {

void apply_edges(FlowGraph& graph, const std::vector<DefUseEdge>& edges) {
    (void)graph;
    for (const auto& [def_instr, use_instr, var] : edges) {
        // the graph is mutable here; the analyses take it by const
        // reference only for the oracle's sake
        link_df(*const_cast<FlowInstr*>(def_instr), *const_cast<FlowInstr*>(use_instr));
    }
}

}  // namespace

void derive_data_flow(FlowGraph& graph) { apply_edges(graph, traversal_def_use_edges(graph)); }

void derive_data_flow_fixpoint(FlowGraph& graph) { apply_edges(graph, oracle_reaching_defs(graph)); }

}  // namespace flowgraph
