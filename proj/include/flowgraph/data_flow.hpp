#pragma once

#include <tuple>
#include <vector>

#include "flowgraph/flow_model.hpp"

namespace flowgraph {

// (definition site, use site, variable)
using DefUseEdge = std::tuple<const FlowInstr*, const FlowInstr*, const VarDef*>;

// Per-definition control-flow walk: starting from the successors of each
// defining instruction, follow cf edges and collect every use of the
// variable until a redefinition takes it out of scope. The use check runs
// before the kill check, so "v = v + 1" both receives and ends a
// definition. Returns the edges sorted by (def id, use id, var name).
std::vector<DefUseEdge> traversal_def_use_edges(const FlowGraph& graph);

// Classic iterative reaching definitions over IN/OUT bit sets; the
// independent oracle for the traversal above and the backing of the
// fixpoint derivation mode. Same result contract as
// traversal_def_use_edges.
std::vector<DefUseEdge> oracle_reaching_defs(const FlowGraph& graph);

// Sets df edges from the per-definition traversal (the default pipeline
// path).
void derive_data_flow(FlowGraph& graph);

// Sets df edges from the fixed-point computation; produces the same edge
// set as derive_data_flow.
void derive_data_flow_fixpoint(FlowGraph& graph);

}  // namespace flowgraph
