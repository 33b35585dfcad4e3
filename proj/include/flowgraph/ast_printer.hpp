#pragma once

#include <string>

#include "flowgraph/ast.hpp"

namespace flowgraph {

// Renders an AST back to compilable subset source. Reparsing the output
// yields a structurally equal tree.
std::string to_java_source(const CompilationUnit& unit);
std::string to_java_source(const MethodDecl& method);

}  // namespace flowgraph
