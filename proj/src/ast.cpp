#include "flowgraph/ast.hpp"

#include <cassert>

namespace flowgraph {

const char* ast_kind_name(AstKind k) {
    switch (k) {
        case AstKind::CompilationUnit: return "CompilationUnit";
        case AstKind::ClassDecl: return "ClassDecl";
        case AstKind::MethodDecl: return "MethodDecl";
        case AstKind::Statement: return "Statement";
        case AstKind::Block: return "Block";
        case AstKind::LocalVarDecl: return "LocalVarDecl";
        case AstKind::ExprStmt: return "ExprStmt";
        case AstKind::If: return "If";
        case AstKind::While: return "While";
        case AstKind::For: return "For";
        case AstKind::Return: return "Return";
        case AstKind::Break: return "Break";
        case AstKind::Continue: return "Continue";
        case AstKind::Labeled: return "Labeled";
        case AstKind::Empty: return "Empty";
        case AstKind::Expression: return "Expression";
        case AstKind::Assignment: return "Assignment";
        case AstKind::Binary: return "Binary";
        case AstKind::Unary: return "Unary";
        case AstKind::VarRef: return "VarRef";
        case AstKind::IntLiteral: return "IntLiteral";
        case AstKind::BoolLiteral: return "BoolLiteral";
        case AstKind::Call: return "Call";
    }
    return "?";
}

std::optional<AstKind> ast_kind_parent(AstKind k) {
    switch (k) {
        case AstKind::Block:
        case AstKind::LocalVarDecl:
        case AstKind::ExprStmt:
        case AstKind::If:
        case AstKind::While:
        case AstKind::For:
        case AstKind::Return:
        case AstKind::Break:
        case AstKind::Continue:
        case AstKind::Labeled:
        case AstKind::Empty:
            return AstKind::Statement;
        case AstKind::Assignment:
        case AstKind::Binary:
        case AstKind::Unary:
        case AstKind::VarRef:
        case AstKind::IntLiteral:
        case AstKind::BoolLiteral:
        case AstKind::Call:
            return AstKind::Expression;
        default:
            return std::nullopt;
    }
}

int ast_kind_depth(AstKind k) {
    int depth = 0;
    for (auto p = ast_kind_parent(k); p; p = ast_kind_parent(*p)) {
        ++depth;
    }
    return depth;
}

bool ast_kind_matches(AstKind rule_kind, AstKind node_kind) {
    for (std::optional<AstKind> k = node_kind; k; k = ast_kind_parent(*k)) {
        if (*k == rule_kind) {
            return true;
        }
    }
    return false;
}

const char* assign_op_text(AssignOp op) {
    switch (op) {
        case AssignOp::Assign: return "=";
        case AssignOp::AddAssign: return "+=";
        case AssignOp::SubAssign: return "-=";
        case AssignOp::MulAssign: return "*=";
        case AssignOp::DivAssign: return "/=";
        case AssignOp::ModAssign: return "%=";
    }
    return "?";
}

const char* binary_op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Mod: return "%";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::Eq: return "==";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::And: return "&&";
        case BinaryOp::Or: return "||";
    }
    return "?";
}

const char* unary_op_token(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Not: return "!";
        case UnaryOp::PreInc:
        case UnaryOp::PostInc: return "++";
        case UnaryOp::PreDec:
        case UnaryOp::PostDec: return "--";
    }
    return "?";
}

bool unary_is_postfix(UnaryOp op) {
    return op == UnaryOp::PostInc || op == UnaryOp::PostDec;
}

namespace {

bool expr_equal(const Expression* a, const Expression* b);
bool stmt_equal(const Statement* a, const Statement* b);

bool expr_equal(const Expression* a, const Expression* b) {
    if (a == nullptr || b == nullptr) {
        return a == b;
    }
    if (a->kind() != b->kind()) {
        return false;
    }
    switch (a->kind()) {
        case AstKind::Assignment: {
            auto& x = static_cast<const Assignment&>(*a);
            auto& y = static_cast<const Assignment&>(*b);
            return x.target == y.target && x.op == y.op && expr_equal(x.value.get(), y.value.get());
        }
        case AstKind::Binary: {
            auto& x = static_cast<const Binary&>(*a);
            auto& y = static_cast<const Binary&>(*b);
            return x.op == y.op && expr_equal(x.left.get(), y.left.get()) &&
                   expr_equal(x.right.get(), y.right.get());
        }
        case AstKind::Unary: {
            auto& x = static_cast<const Unary&>(*a);
            auto& y = static_cast<const Unary&>(*b);
            return x.op == y.op && expr_equal(x.operand.get(), y.operand.get());
        }
        case AstKind::VarRef:
            return static_cast<const VarRef&>(*a).name == static_cast<const VarRef&>(*b).name;
        case AstKind::IntLiteral:
            return static_cast<const IntLiteral&>(*a).value == static_cast<const IntLiteral&>(*b).value;
        case AstKind::BoolLiteral:
            return static_cast<const BoolLiteral&>(*a).value == static_cast<const BoolLiteral&>(*b).value;
        case AstKind::Call: {
            auto& x = static_cast<const Call&>(*a);
            auto& y = static_cast<const Call&>(*b);
            if (x.name != y.name || x.args.size() != y.args.size()) {
                return false;
            }
            for (std::size_t i = 0; i < x.args.size(); ++i) {
                if (!expr_equal(x.args[i].get(), y.args[i].get())) {
                    return false;
                }
            }
            return true;
        }
        default:
            return false;
    }
}

bool stmt_equal(const Statement* a, const Statement* b) {
    if (a == nullptr || b == nullptr) {
        return a == b;
    }
    if (a->kind() != b->kind()) {
        return false;
    }
    switch (a->kind()) {
        case AstKind::Block: {
            auto& x = static_cast<const Block&>(*a);
            auto& y = static_cast<const Block&>(*b);
            if (x.statements.size() != y.statements.size()) {
                return false;
            }
            for (std::size_t i = 0; i < x.statements.size(); ++i) {
                if (!stmt_equal(x.statements[i].get(), y.statements[i].get())) {
                    return false;
                }
            }
            return true;
        }
        case AstKind::LocalVarDecl: {
            auto& x = static_cast<const LocalVarDecl&>(*a);
            auto& y = static_cast<const LocalVarDecl&>(*b);
            return x.type == y.type && x.name == y.name && expr_equal(x.init.get(), y.init.get());
        }
        case AstKind::ExprStmt:
            return expr_equal(static_cast<const ExprStmt&>(*a).expr.get(),
                              static_cast<const ExprStmt&>(*b).expr.get());
        case AstKind::If: {
            auto& x = static_cast<const If&>(*a);
            auto& y = static_cast<const If&>(*b);
            return expr_equal(x.cond.get(), y.cond.get()) &&
                   stmt_equal(x.then_branch.get(), y.then_branch.get()) &&
                   stmt_equal(x.else_branch.get(), y.else_branch.get());
        }
        case AstKind::While: {
            auto& x = static_cast<const While&>(*a);
            auto& y = static_cast<const While&>(*b);
            return expr_equal(x.cond.get(), y.cond.get()) && stmt_equal(x.body.get(), y.body.get());
        }
        case AstKind::For: {
            auto& x = static_cast<const For&>(*a);
            auto& y = static_cast<const For&>(*b);
            return stmt_equal(x.init.get(), y.init.get()) && expr_equal(x.cond.get(), y.cond.get()) &&
                   expr_equal(x.update.get(), y.update.get()) && stmt_equal(x.body.get(), y.body.get());
        }
        case AstKind::Return:
            return expr_equal(static_cast<const Return&>(*a).value.get(),
                              static_cast<const Return&>(*b).value.get());
        case AstKind::Break:
            return static_cast<const Break&>(*a).label == static_cast<const Break&>(*b).label;
        case AstKind::Continue:
            return static_cast<const Continue&>(*a).label == static_cast<const Continue&>(*b).label;
        case AstKind::Labeled: {
            auto& x = static_cast<const Labeled&>(*a);
            auto& y = static_cast<const Labeled&>(*b);
            return x.label == y.label && stmt_equal(x.stmt.get(), y.stmt.get());
        }
        case AstKind::Empty:
            return true;
        default:
            return false;
    }
}

bool method_equal(const MethodDecl& a, const MethodDecl& b) {
    if (a.name != b.name || a.params.size() != b.params.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].name != b.params[i].name || a.params[i].type != b.params[i].type) {
            return false;
        }
    }
    return stmt_equal(a.body.get(), b.body.get());
}

}  // namespace

bool ast_equal(const AstNode& a, const AstNode& b) {
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case AstKind::CompilationUnit: {
            auto& x = static_cast<const CompilationUnit&>(a);
            auto& y = static_cast<const CompilationUnit&>(b);
            if (x.classes.size() != y.classes.size()) {
                return false;
            }
            for (std::size_t i = 0; i < x.classes.size(); ++i) {
                if (!ast_equal(*x.classes[i], *y.classes[i])) {
                    return false;
                }
            }
            return true;
        }
        case AstKind::ClassDecl: {
            auto& x = static_cast<const ClassDecl&>(a);
            auto& y = static_cast<const ClassDecl&>(b);
            if (x.name != y.name || x.methods.size() != y.methods.size()) {
                return false;
            }
            for (std::size_t i = 0; i < x.methods.size(); ++i) {
                if (!method_equal(*x.methods[i], *y.methods[i])) {
                    return false;
                }
            }
            return true;
        }
        case AstKind::MethodDecl:
            return method_equal(static_cast<const MethodDecl&>(a), static_cast<const MethodDecl&>(b));
        default:
            if (auto* sa = dynamic_cast<const Statement*>(&a)) {
                return stmt_equal(sa, static_cast<const Statement*>(&b));
            }
            if (auto* ea = dynamic_cast<const Expression*>(&a)) {
                return expr_equal(ea, static_cast<const Expression*>(&b));
            }
            return false;
    }
}

}  // namespace flowgraph
