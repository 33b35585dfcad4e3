#pragma once

#include <string>
#include <vector>

#include "flowgraph/ast.hpp"

namespace flowgraph {

// Canonical text rendering: one space around binary and assignment
// operators, none after unary operators, parentheses only where the
// expression structure would otherwise change under reparsing.

int expr_precedence(const Expression& e);

std::string compose_binary(BinaryOp op, const std::string& left, int left_prec,
                           const std::string& right, int right_prec);
std::string compose_unary(UnaryOp op, const std::string& operand, int operand_prec);
std::string compose_assignment(const std::string& target, AssignOp op, const std::string& value);
std::string compose_call(const std::string& name, const std::vector<std::string>& args);

// Pure recursive renderer over an expression tree.
std::string expr_to_text(const Expression& e);

// Flow-instruction labels for statements.
std::string decl_text(const std::string& type, const std::string& name, const std::string* init);
std::string return_text(const std::string* value);
std::string jump_text(const char* keyword, const std::string& label);
std::string method_label(const std::string& method_name);

inline const char* exit_label() { return "Exit"; }

}  // namespace flowgraph
