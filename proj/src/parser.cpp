#include "flowgraph/parser.hpp"

#include <unordered_set>

#include "flowgraph/errors.hpp"
#include "flowgraph/lexer.hpp"

namespace flowgraph {

namespace {

class Parser {
public:
    explicit Parser(std::string_view source) : tokens_(tokenize(source)) {}

    std::unique_ptr<CompilationUnit> parse_unit() {
        auto unit = std::make_unique<CompilationUnit>();
        unit->pos = peek().pos;
        while (!at(TokenKind::Eof)) {
            unit->classes.push_back(parse_class());
        }
        return unit;
    }

    ExprPtr parse_single_expression() {
        ExprPtr e = parse_expr();
        expect(TokenKind::Eof);
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = index_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at(TokenKind k) const { return peek().kind == k; }

    const Token& advance() { return tokens_[index_++]; }

    bool accept(TokenKind k) {
        if (at(k)) {
            ++index_;
            return true;
        }
        return false;
    }

    const Token& expect(TokenKind k) {
        if (!at(k)) {
            fail({token_kind_name(k)});
        }
        return advance();
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string what = "unexpected " + std::string(token_kind_name(t.kind));
        if (!t.text.empty() && t.kind != TokenKind::Eof) {
            what += " '" + t.text + "'";
        }
        if (!expected.empty()) {
            what += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                what += (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") + expected[i];
            }
        }
        throw SyntaxError(t.pos, what, std::move(expected));
    }

    std::unique_ptr<ClassDecl> parse_class() {
        auto cls = std::make_unique<ClassDecl>();
        cls->pos = peek().pos;
        expect(TokenKind::KwClass);
        cls->name = expect(TokenKind::Ident).text;
        expect(TokenKind::LBrace);
        while (!accept(TokenKind::RBrace)) {
            cls->methods.push_back(parse_method());
        }
        return cls;
    }

    std::unique_ptr<MethodDecl> parse_method() {
        auto method = std::make_unique<MethodDecl>();
        method->pos = peek().pos;
        std::string return_type = expect(TokenKind::Ident).text;  // types are opaque names
        (void)return_type;
        method->name = expect(TokenKind::Ident).text;
        expect(TokenKind::LParen);
        if (!at(TokenKind::RParen)) {
            do {
                MethodDecl::Param p;
                p.type = expect(TokenKind::Ident).text;
                p.name = expect(TokenKind::Ident).text;
                method->params.push_back(std::move(p));
            } while (accept(TokenKind::Comma));
        }
        expect(TokenKind::RParen);
        method->body = parse_block();
        return method;
    }

    std::unique_ptr<Block> parse_block() {
        auto block = std::make_unique<Block>();
        block->pos = peek().pos;
        expect(TokenKind::LBrace);
        while (!accept(TokenKind::RBrace)) {
            block->statements.push_back(parse_statement());
        }
        return block;
    }

    StmtPtr parse_statement() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::LBrace:
                return parse_block();
            case TokenKind::Semi: {
                auto s = std::make_unique<Empty>();
                s->pos = t.pos;
                advance();
                return s;
            }
            case TokenKind::KwIf:
                return parse_if();
            case TokenKind::KwWhile:
                return parse_while();
            case TokenKind::KwFor:
                return parse_for();
            case TokenKind::KwReturn: {
                auto s = std::make_unique<Return>();
                s->pos = t.pos;
                advance();
                if (!at(TokenKind::Semi)) {
                    s->value = parse_expr();
                }
                expect(TokenKind::Semi);
                return s;
            }
            case TokenKind::KwBreak: {
                auto s = std::make_unique<Break>();
                s->pos = t.pos;
                advance();
                if (at(TokenKind::Ident)) {
                    s->label = advance().text;
                }
                expect(TokenKind::Semi);
                return s;
            }
            case TokenKind::KwContinue: {
                auto s = std::make_unique<Continue>();
                s->pos = t.pos;
                advance();
                if (at(TokenKind::Ident)) {
                    s->label = advance().text;
                }
                expect(TokenKind::Semi);
                return s;
            }
            case TokenKind::Ident:
                if (peek(1).kind == TokenKind::Colon) {
                    auto s = std::make_unique<Labeled>();
                    s->pos = t.pos;
                    s->label = advance().text;
                    advance();  // ':'
                    s->stmt = parse_statement();
                    return s;
                }
                if (peek(1).kind == TokenKind::Ident) {
                    StmtPtr s = parse_local_var_decl();
                    expect(TokenKind::Semi);
                    return s;
                }
                [[fallthrough]];
            case TokenKind::IntLit:
            case TokenKind::KwTrue:
            case TokenKind::KwFalse:
            case TokenKind::LParen:
            case TokenKind::Minus:
            case TokenKind::Not:
            case TokenKind::PlusPlus:
            case TokenKind::MinusMinus: {
                auto s = std::make_unique<ExprStmt>();
                s->pos = t.pos;
                s->expr = parse_expr();
                expect(TokenKind::Semi);
                return s;
            }
            default:
                fail({"statement"});
        }
    }

    std::unique_ptr<LocalVarDecl> parse_local_var_decl() {
        auto s = std::make_unique<LocalVarDecl>();
        s->pos = peek().pos;
        s->type = expect(TokenKind::Ident).text;
        s->name = expect(TokenKind::Ident).text;
        if (accept(TokenKind::Assign)) {
            s->init = parse_expr();
        }
        return s;
    }

    StmtPtr parse_if() {
        auto s = std::make_unique<If>();
        s->pos = peek().pos;
        expect(TokenKind::KwIf);
        expect(TokenKind::LParen);
        s->cond = parse_expr();
        expect(TokenKind::RParen);
        s->then_branch = parse_statement();
        if (accept(TokenKind::KwElse)) {
            s->else_branch = parse_statement();
        }
        return s;
    }

    StmtPtr parse_while() {
        auto s = std::make_unique<While>();
        s->pos = peek().pos;
        expect(TokenKind::KwWhile);
        expect(TokenKind::LParen);
        s->cond = parse_expr();
        expect(TokenKind::RParen);
        s->body = parse_statement();
        return s;
    }

    StmtPtr parse_for() {
        auto s = std::make_unique<For>();
        s->pos = peek().pos;
        expect(TokenKind::KwFor);
        expect(TokenKind::LParen);
        if (!at(TokenKind::Semi)) {
            if (at(TokenKind::Ident) && peek(1).kind == TokenKind::Ident) {
                s->init = parse_local_var_decl();
            } else {
                auto init = std::make_unique<ExprStmt>();
                init->pos = peek().pos;
                init->expr = parse_expr();
                s->init = std::move(init);
            }
        }
        expect(TokenKind::Semi);
        if (!at(TokenKind::Semi)) {
            s->cond = parse_expr();
        }
        expect(TokenKind::Semi);
        if (!at(TokenKind::RParen)) {
            s->update = parse_expr();
        }
        expect(TokenKind::RParen);
        s->body = parse_statement();
        return s;
    }

    // expr := or-expr | identifier assign-op expr  (assignment is right
    // associative; its target must be a plain identifier)
    ExprPtr parse_expr() {
        ExprPtr lhs = parse_or();
        std::optional<AssignOp> op;
        switch (peek().kind) {
            case TokenKind::Assign: op = AssignOp::Assign; break;
            case TokenKind::PlusAssign: op = AssignOp::AddAssign; break;
            case TokenKind::MinusAssign: op = AssignOp::SubAssign; break;
            case TokenKind::StarAssign: op = AssignOp::MulAssign; break;
            case TokenKind::SlashAssign: op = AssignOp::DivAssign; break;
            case TokenKind::PercentAssign: op = AssignOp::ModAssign; break;
            default: return lhs;
        }
        if (lhs->kind() != AstKind::VarRef) {
            throw SyntaxError(peek().pos, "assignment target must be a plain variable");
        }
        auto assign = std::make_unique<Assignment>();
        assign->pos = lhs->pos;
        assign->target = static_cast<const VarRef&>(*lhs).name;
        assign->op = *op;
        advance();
        assign->value = parse_expr();
        return assign;
    }

    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (at(TokenKind::OrOr)) {
            auto b = std::make_unique<Binary>();
            b->pos = peek().pos;
            b->op = BinaryOp::Or;
            advance();
            b->left = std::move(e);
            b->right = parse_and();
            e = std::move(b);
        }
        return e;
    }

    ExprPtr parse_and() {
        ExprPtr e = parse_equality();
        while (at(TokenKind::AndAnd)) {
            auto b = std::make_unique<Binary>();
            b->pos = peek().pos;
            b->op = BinaryOp::And;
            advance();
            b->left = std::move(e);
            b->right = parse_equality();
            e = std::move(b);
        }
        return e;
    }

    ExprPtr parse_equality() {
        ExprPtr e = parse_relational();
        while (at(TokenKind::EqEq) || at(TokenKind::Ne)) {
            auto b = std::make_unique<Binary>();
            b->pos = peek().pos;
            b->op = at(TokenKind::EqEq) ? BinaryOp::Eq : BinaryOp::Ne;
            advance();
            b->left = std::move(e);
            b->right = parse_relational();
            e = std::move(b);
        }
        return e;
    }

    ExprPtr parse_relational() {
        ExprPtr e = parse_additive();
        while (true) {
            BinaryOp op;
            switch (peek().kind) {
                case TokenKind::Lt: op = BinaryOp::Lt; break;
                case TokenKind::Gt: op = BinaryOp::Gt; break;
                case TokenKind::Le: op = BinaryOp::Le; break;
                case TokenKind::Ge: op = BinaryOp::Ge; break;
                default: return e;
            }
            auto b = std::make_unique<Binary>();
            b->pos = peek().pos;
            b->op = op;
            advance();
            b->left = std::move(e);
            b->right = parse_additive();
            e = std::move(b);
        }
    }

    ExprPtr parse_additive() {
        ExprPtr e = parse_multiplicative();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            auto b = std::make_unique<Binary>();
            b->pos = peek().pos;
            b->op = at(TokenKind::Plus) ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            b->left = std::move(e);
            b->right = parse_multiplicative();
            e = std::move(b);
        }
        return e;
    }

    ExprPtr parse_multiplicative() {
        ExprPtr e = parse_unary();
        while (true) {
            BinaryOp op;
            switch (peek().kind) {
                case TokenKind::Star: op = BinaryOp::Mul; break;
                case TokenKind::Slash: op = BinaryOp::Div; break;
                case TokenKind::Percent: op = BinaryOp::Mod; break;
                default: return e;
            }
            auto b = std::make_unique<Binary>();
            b->pos = peek().pos;
            b->op = op;
            advance();
            b->left = std::move(e);
            b->right = parse_unary();
            e = std::move(b);
        }
    }

    ExprPtr parse_unary() {
        const Token& t = peek();
        UnaryOp op;
        switch (t.kind) {
            case TokenKind::Minus: op = UnaryOp::Neg; break;
            case TokenKind::Not: op = UnaryOp::Not; break;
            case TokenKind::PlusPlus: op = UnaryOp::PreInc; break;
            case TokenKind::MinusMinus: op = UnaryOp::PreDec; break;
            default: return parse_postfix();
        }
        auto u = std::make_unique<Unary>();
        u->pos = t.pos;
        u->op = op;
        advance();
        u->operand = parse_unary();
        if ((op == UnaryOp::PreInc || op == UnaryOp::PreDec) &&
            u->operand->kind() != AstKind::VarRef) {
            throw SyntaxError(t.pos, "increment/decrement operand must be a plain variable");
        }
        return u;
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (at(TokenKind::PlusPlus) || at(TokenKind::MinusMinus)) {
            const Token& t = peek();
            if (e->kind() != AstKind::VarRef) {
                throw SyntaxError(t.pos, "increment/decrement operand must be a plain variable");
            }
            auto u = std::make_unique<Unary>();
            u->pos = e->pos;
            u->op = at(TokenKind::PlusPlus) ? UnaryOp::PostInc : UnaryOp::PostDec;
            advance();
            u->operand = std::move(e);
            e = std::move(u);
        }
        return e;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IntLit: {
                auto e = std::make_unique<IntLiteral>();
                e->pos = t.pos;
                e->value = std::stoll(advance().text);
                return e;
            }
            case TokenKind::KwTrue:
            case TokenKind::KwFalse: {
                auto e = std::make_unique<BoolLiteral>();
                e->pos = t.pos;
                e->value = t.kind == TokenKind::KwTrue;
                advance();
                return e;
            }
            case TokenKind::Ident: {
                std::string name = advance().text;
                if (accept(TokenKind::LParen)) {
                    auto call = std::make_unique<Call>();
                    call->pos = t.pos;
                    call->name = std::move(name);
                    if (!at(TokenKind::RParen)) {
                        do {
                            call->args.push_back(parse_expr());
                        } while (accept(TokenKind::Comma));
                    }
                    expect(TokenKind::RParen);
                    return call;
                }
                auto e = std::make_unique<VarRef>();
                e->pos = t.pos;
                e->name = std::move(name);
                return e;
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(TokenKind::RParen);
                return e;
            }
            default:
                fail({"expression"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

// --- static checks -------------------------------------------------------

struct LabelScope {
    std::string name;
    bool is_loop = false;
};

class SemanticChecker {
public:
    void check(const CompilationUnit& unit) {
        std::unordered_set<std::string> class_names;
        for (const auto& cls : unit.classes) {
            if (!class_names.insert(cls->name).second) {
                throw DuplicateDeclaration(cls->pos, cls->name);
            }
            std::unordered_set<std::string> method_names;
            for (const auto& method : cls->methods) {
                if (!method_names.insert(method->name).second) {
                    throw DuplicateDeclaration(method->pos, method->name);
                }
                check_method(*method);
            }
        }
    }

private:
    void check_method(const MethodDecl& method) {
        std::unordered_set<std::string> param_names;
        for (const auto& p : method.params) {
            if (!param_names.insert(p.name).second) {
                throw DuplicateDeclaration(method.pos, p.name);
            }
        }
        labels_.clear();
        loop_depth_ = 0;
        check_stmt(*method.body);
    }

    void check_stmt(const Statement& stmt) {
        switch (stmt.kind()) {
            case AstKind::Block:
                for (const auto& s : static_cast<const Block&>(stmt).statements) {
                    check_stmt(*s);
                }
                break;
            case AstKind::If: {
                auto& s = static_cast<const If&>(stmt);
                check_stmt(*s.then_branch);
                if (s.else_branch) {
                    check_stmt(*s.else_branch);
                }
                break;
            }
            case AstKind::While:
                enter_loop(static_cast<const While&>(stmt).body.get());
                break;
            case AstKind::For:
                enter_loop(static_cast<const For&>(stmt).body.get());
                break;
            case AstKind::Labeled: {
                auto& s = static_cast<const Labeled&>(stmt);
                for (const auto& l : labels_) {
                    if (l.name == s.label) {
                        throw SemanticError(s.pos, "label '" + s.label + "' is already in scope");
                    }
                }
                const Statement* inner = s.stmt.get();
                while (inner->kind() == AstKind::Labeled) {
                    inner = static_cast<const Labeled&>(*inner).stmt.get();
                }
                bool is_loop = inner->kind() == AstKind::While || inner->kind() == AstKind::For;
                labels_.push_back({s.label, is_loop});
                check_stmt(*s.stmt);
                labels_.pop_back();
                break;
            }
            case AstKind::Break:
                check_jump(stmt.pos, static_cast<const Break&>(stmt).label);
                break;
            case AstKind::Continue:
                check_jump(stmt.pos, static_cast<const Continue&>(stmt).label);
                break;
            default:
                break;
        }
    }

    void enter_loop(const Statement* body) {
        // labels declared outside the loop stay visible, matching Java
        ++loop_depth_;
        check_stmt(*body);
        --loop_depth_;
    }

    void check_jump(SourcePos pos, const std::string& label) {
        if (label.empty()) {
            if (loop_depth_ == 0) {
                throw UnresolvedLabel(pos, "");
            }
            return;
        }
        for (auto it = labels_.rbegin(); it != labels_.rend(); ++it) {
            if (it->name == label) {
                if (!it->is_loop) {
                    throw SemanticError(pos, "label '" + label + "' does not decorate a loop");
                }
                return;
            }
        }
        throw UnresolvedLabel(pos, label);
    }

    std::vector<LabelScope> labels_;
    int loop_depth_ = 0;
};

}  // namespace

std::unique_ptr<CompilationUnit> parse_java(std::string_view source) {
    Parser parser(source);
    auto unit = parser.parse_unit();
    check_semantics(*unit);
    return unit;
}

ExprPtr parse_expression(std::string_view source) {
    Parser parser(source);
    return parser.parse_single_expression();
}

void check_semantics(const CompilationUnit& unit) {
    SemanticChecker().check(unit);
}

}  // namespace flowgraph
