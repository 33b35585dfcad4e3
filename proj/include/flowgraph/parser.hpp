#pragma once

#include <memory>
#include <string_view>

#include "flowgraph/ast.hpp"

namespace flowgraph {

// Parses the Java subset. Throws SyntaxError for anything outside the
// grammar and SemanticError for violations of the static rules (duplicate
// class/method/parameter names, jumps without a matching loop, labels that
// do not decorate a loop when targeted).
std::unique_ptr<CompilationUnit> parse_java(std::string_view source);

// Parses a single expression; used by tests and tools.
ExprPtr parse_expression(std::string_view source);

// Static checks beyond the grammar, shared by both frontend entry points.
// parse_java runs this automatically; loaders of external ASTs call it
// before handing an AST to the pipeline.
void check_semantics(const CompilationUnit& unit);

}  // namespace flowgraph
