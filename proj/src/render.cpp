#include "flowgraph/render.hpp"

namespace flowgraph {

namespace {

int binary_precedence(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or: return 4;
        case BinaryOp::And: return 5;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return 9;
        case BinaryOp::Lt:
        case BinaryOp::Gt:
        case BinaryOp::Le:
        case BinaryOp::Ge: return 10;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 12;
        case BinaryOp::Mul:
        case BinaryOp::Div:
        case BinaryOp::Mod: return 13;
    }
    return 0;
}

std::string parenthesize(const std::string& text) { return "(" + text + ")"; }

}  // namespace

int expr_precedence(const Expression& e) {
    switch (e.kind()) {
        case AstKind::Assignment: return 1;
        case AstKind::Binary: return binary_precedence(static_cast<const Binary&>(e).op);
        case AstKind::Unary:
            return unary_is_postfix(static_cast<const Unary&>(e).op) ? 15 : 14;
        default: return 16;  // primary
    }
}

std::string compose_binary(BinaryOp op, const std::string& left, int left_prec,
                           const std::string& right, int right_prec) {
    int prec = binary_precedence(op);
    // left associative: equal precedence on the right needs parentheses
    std::string l = left_prec < prec ? parenthesize(left) : left;
    std::string r = right_prec <= prec ? parenthesize(right) : right;
    return l + " " + binary_op_text(op) + " " + r;
}

std::string compose_unary(UnaryOp op, const std::string& operand, int operand_prec) {
    if (unary_is_postfix(op)) {
        return operand + unary_op_token(op);
    }
    std::string inner = operand_prec < 14 ? parenthesize(operand) : operand;
    // "-" followed by a negative rendering would lex as "--"
    if (op == UnaryOp::Neg && !inner.empty() && inner.front() == '-') {
        inner = parenthesize(inner);
    }
    return unary_op_token(op) + inner;
}

std::string compose_assignment(const std::string& target, AssignOp op, const std::string& value) {
    return target + " " + assign_op_text(op) + " " + value;
}

std::string compose_call(const std::string& name, const std::vector<std::string>& args) {
    std::string out = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += args[i];
    }
    out += ")";
    return out;
}

std::string expr_to_text(const Expression& e) {
    switch (e.kind()) {
        case AstKind::Assignment: {
            auto& a = static_cast<const Assignment&>(e);
            return compose_assignment(a.target, a.op, expr_to_text(*a.value));
        }
        case AstKind::Binary: {
            auto& b = static_cast<const Binary&>(e);
            return compose_binary(b.op, expr_to_text(*b.left), expr_precedence(*b.left),
                                  expr_to_text(*b.right), expr_precedence(*b.right));
        }
        case AstKind::Unary: {
            auto& u = static_cast<const Unary&>(e);
            return compose_unary(u.op, expr_to_text(*u.operand), expr_precedence(*u.operand));
        }
        case AstKind::VarRef:
            return static_cast<const VarRef&>(e).name;
        case AstKind::IntLiteral:
            return std::to_string(static_cast<const IntLiteral&>(e).value);
        case AstKind::BoolLiteral:
            return static_cast<const BoolLiteral&>(e).value ? "true" : "false";
        case AstKind::Call: {
            auto& c = static_cast<const Call&>(e);
            std::vector<std::string> args;
            args.reserve(c.args.size());
            for (const auto& arg : c.args) {
                args.push_back(expr_to_text(*arg));
            }
            return compose_call(c.name, args);
        }
        default:
            return "?";
    }
}

std::string decl_text(const std::string& type, const std::string& name, const std::string* init) {
    std::string out = type + " " + name;
    if (init != nullptr) {
        out += " = " + *init;
    }
    return out;
}

std::string return_text(const std::string* value) {
    return value != nullptr ? "return " + *value : "return";
}

std::string jump_text(const char* keyword, const std::string& label) {
    return label.empty() ? keyword : std::string(keyword) + " " + label;
}

std::string method_label(const std::string& method_name) { return method_name + "()"; }

}  // namespace flowgraph
