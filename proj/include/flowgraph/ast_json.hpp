#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "flowgraph/ast.hpp"

namespace flowgraph {

// JSON AST document format:
//   {"classes":[{"name":C,"methods":[{"name":m,"params":[{"name":p,"type":t}],
//    "body":Stmt}]}]}
// Stmt/Expr objects are discriminated by "kind":
//   statements: block, localVar, exprStmt, if, while, for, return, break,
//               continue, labeled, empty
//   expressions: assign, binary, unary, varRef, intLit, boolLit, call
// Optional "line"/"col" fields carry source positions.
std::unique_ptr<CompilationUnit> load_ast_json(std::string_view document);

std::string dump_ast_json(const CompilationUnit& unit);

}  // namespace flowgraph
