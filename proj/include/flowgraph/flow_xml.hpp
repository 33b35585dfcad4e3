#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "flowgraph/flow_model.hpp"

namespace flowgraph {

// XML dialect:
//   <flowgraphs>
//     <graph class= method=>
//       <var name= origin=/>
//       <instr id= kind= txt=>
//         <def var=/> <use var=/> <cfNext ref=/> <dfNext ref=/>
//       </instr>
//     </graph>
//   </flowgraphs>
// Output is deterministic: instructions in document order, link lists in
// insertion order. cf_prev is not serialized; it is restored as the
// inverse of cfNext on load.

std::string serialize_xml(const FlowGraph& graph);
std::string serialize_xml(const std::vector<const FlowGraph*>& graphs);

std::vector<std::unique_ptr<FlowGraph>> deserialize_xml(std::string_view text);

}  // namespace flowgraph
