#pragma once

#include <string>
#include <vector>

#include "flowgraph/flow_model.hpp"

namespace flowgraph {

enum class EdgeSet : std::uint8_t { Cf, Df, Both };

// GraphViz rendering: one digraph per flow graph, nodes named n<id> and
// labelled with txt, control-flow edges solid, data-flow edges dashed.
std::string serialize_dot(const FlowGraph& graph, EdgeSet edges);
std::string serialize_dot(const std::vector<const FlowGraph*>& graphs, EdgeSet edges);

}  // namespace flowgraph
