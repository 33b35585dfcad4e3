#include "flowgraph/flow_dot.hpp"

#include <sstream>

namespace flowgraph {

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

void write_graph(std::ostringstream& out, const FlowGraph& graph, EdgeSet edges) {
    out << "digraph \"" << dot_escape(graph.class_name()) << "." << dot_escape(graph.method_name())
        << "\" {\n";
    for (const auto& instr : graph.instrs()) {
        out << "  n" << instr->id() << " [label=\"" << dot_escape(instr->txt()) << "\"];\n";
    }
    if (edges == EdgeSet::Cf || edges == EdgeSet::Both) {
        for (const auto& instr : graph.instrs()) {
            for (const FlowInstr* next : instr->cf_next()) {
                out << "  n" << instr->id() << " -> n" << next->id() << ";\n";
            }
        }
    }
    if (edges == EdgeSet::Df || edges == EdgeSet::Both) {
        for (const auto& instr : graph.instrs()) {
            for (const FlowInstr* next : instr->df_next()) {
                out << "  n" << instr->id() << " -> n" << next->id() << " [style=dashed];\n";
            }
        }
    }
    out << "}\n";
}

}  // namespace

std::string serialize_dot(const FlowGraph& graph, EdgeSet edges) {
    std::ostringstream out;
    write_graph(out, graph, edges);
    return out.str();
}

std::string serialize_dot(const std::vector<const FlowGraph*>& graphs, EdgeSet edges) {
    std::ostringstream out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i > 0) {
            out << "\n";
        }
        write_graph(out, *graphs[i], edges);
    }
    return out.str();
}

}  // namespace flowgraph
