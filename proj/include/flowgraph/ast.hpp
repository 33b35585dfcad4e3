#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flowgraph {

struct SourcePos {
    int line = 0;
    int column = 0;
};

// Runtime kind of every AST node. Statement and Expression are abstract
// hub kinds; the concrete kinds list them as parent. The transformation
// engine dispatches rule instantiation over this hierarchy.
enum class AstKind : std::uint8_t {
    CompilationUnit,
    ClassDecl,
    MethodDecl,
    Statement,
    Block,
    LocalVarDecl,
    ExprStmt,
    If,
    While,
    For,
    Return,
    Break,
    Continue,
    Labeled,
    Empty,
    Expression,
    Assignment,
    Binary,
    Unary,
    VarRef,
    IntLiteral,
    BoolLiteral,
    Call,
};

const char* ast_kind_name(AstKind k);
std::optional<AstKind> ast_kind_parent(AstKind k);
int ast_kind_depth(AstKind k);
// true when rule_kind equals node_kind or is one of its ancestors
bool ast_kind_matches(AstKind rule_kind, AstKind node_kind);

struct AstNode {
    SourcePos pos;

    AstNode() = default;
    AstNode(const AstNode&) = delete;
    AstNode& operator=(const AstNode&) = delete;
    virtual ~AstNode() = default;

    virtual AstKind kind() const = 0;
};

// --- expressions ---------------------------------------------------------

struct Expression : AstNode {};
using ExprPtr = std::unique_ptr<Expression>;

enum class AssignOp : std::uint8_t { Assign, AddAssign, SubAssign, MulAssign, DivAssign, ModAssign };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Mod, Lt, Gt, Le, Ge, Eq, Ne, And, Or };
enum class UnaryOp : std::uint8_t { Neg, Not, PreInc, PreDec, PostInc, PostDec };

const char* assign_op_text(AssignOp op);
const char* binary_op_text(BinaryOp op);
const char* unary_op_token(UnaryOp op);
bool unary_is_postfix(UnaryOp op);

struct Assignment final : Expression {
    std::string target;
    AssignOp op = AssignOp::Assign;
    ExprPtr value;
    AstKind kind() const override { return AstKind::Assignment; }
};

struct Binary final : Expression {
    ExprPtr left;
    BinaryOp op = BinaryOp::Add;
    ExprPtr right;
    AstKind kind() const override { return AstKind::Binary; }
};

struct Unary final : Expression {
    UnaryOp op = UnaryOp::Neg;
    ExprPtr operand;
    AstKind kind() const override { return AstKind::Unary; }
};

struct VarRef final : Expression {
    std::string name;
    AstKind kind() const override { return AstKind::VarRef; }
};

struct IntLiteral final : Expression {
    long long value = 0;
    AstKind kind() const override { return AstKind::IntLiteral; }
};

struct BoolLiteral final : Expression {
    bool value = false;
    AstKind kind() const override { return AstKind::BoolLiteral; }
};

struct Call final : Expression {
    std::string name;
    std::vector<ExprPtr> args;
    AstKind kind() const override { return AstKind::Call; }
};

// --- statements ----------------------------------------------------------

struct Statement : AstNode {};
using StmtPtr = std::unique_ptr<Statement>;

struct Block final : Statement {
    std::vector<StmtPtr> statements;
    AstKind kind() const override { return AstKind::Block; }
};

struct LocalVarDecl final : Statement {
    std::string type;
    std::string name;
    ExprPtr init;  // may be null
    AstKind kind() const override { return AstKind::LocalVarDecl; }
};

struct ExprStmt final : Statement {
    ExprPtr expr;
    AstKind kind() const override { return AstKind::ExprStmt; }
};

struct If final : Statement {
    ExprPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch;  // may be null
    AstKind kind() const override { return AstKind::If; }
};

struct While final : Statement {
    ExprPtr cond;
    StmtPtr body;
    AstKind kind() const override { return AstKind::While; }
};

struct For final : Statement {
    StmtPtr init;    // LocalVarDecl or ExprStmt; may be null
    ExprPtr cond;    // may be null; absent condition means constant true
    ExprPtr update;  // may be null
    StmtPtr body;
    AstKind kind() const override { return AstKind::For; }
};

struct Return final : Statement {
    ExprPtr value;  // may be null
    AstKind kind() const override { return AstKind::Return; }
};

struct Break final : Statement {
    std::string label;  // empty = unlabeled
    AstKind kind() const override { return AstKind::Break; }
};

struct Continue final : Statement {
    std::string label;  // empty = unlabeled
    AstKind kind() const override { return AstKind::Continue; }
};

struct Labeled final : Statement {
    std::string label;
    StmtPtr stmt;
    AstKind kind() const override { return AstKind::Labeled; }
};

struct Empty final : Statement {
    AstKind kind() const override { return AstKind::Empty; }
};

// --- declarations --------------------------------------------------------

struct MethodDecl final : AstNode {
    struct Param {
        std::string name;
        std::string type;
    };

    std::string name;
    std::vector<Param> params;
    std::unique_ptr<Block> body;
    AstKind kind() const override { return AstKind::MethodDecl; }
};

struct ClassDecl final : AstNode {
    std::string name;
    std::vector<std::unique_ptr<MethodDecl>> methods;
    AstKind kind() const override { return AstKind::ClassDecl; }
};

struct CompilationUnit final : AstNode {
    std::vector<std::unique_ptr<ClassDecl>> classes;
    AstKind kind() const override { return AstKind::CompilationUnit; }
};

// Structural equality; source positions are ignored.
bool ast_equal(const AstNode& a, const AstNode& b);

}  // namespace flowgraph
