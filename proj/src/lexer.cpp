#include "flowgraph/lexer.hpp"

#include <cctype>
#include <unordered_map>

#include "flowgraph/errors.hpp"

namespace flowgraph {

const char* token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::IntLit: return "integer literal";
        case TokenKind::KwClass: return "'class'";
        case TokenKind::KwIf: return "'if'";
        case TokenKind::KwElse: return "'else'";
        case TokenKind::KwWhile: return "'while'";
        case TokenKind::KwFor: return "'for'";
        case TokenKind::KwReturn: return "'return'";
        case TokenKind::KwBreak: return "'break'";
        case TokenKind::KwContinue: return "'continue'";
        case TokenKind::KwTrue: return "'true'";
        case TokenKind::KwFalse: return "'false'";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Semi: return "';'";
        case TokenKind::Comma: return "','";
        case TokenKind::Colon: return "':'";
        case TokenKind::Assign: return "'='";
        case TokenKind::PlusAssign: return "'+='";
        case TokenKind::MinusAssign: return "'-='";
        case TokenKind::StarAssign: return "'*='";
        case TokenKind::SlashAssign: return "'/='";
        case TokenKind::PercentAssign: return "'%='";
        case TokenKind::PlusPlus: return "'++'";
        case TokenKind::MinusMinus: return "'--'";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Percent: return "'%'";
        case TokenKind::Lt: return "'<'";
        case TokenKind::Gt: return "'>'";
        case TokenKind::Le: return "'<='";
        case TokenKind::Ge: return "'>='";
        case TokenKind::EqEq: return "'=='";
        case TokenKind::Ne: return "'!='";
        case TokenKind::AndAnd: return "'&&'";
        case TokenKind::OrOr: return "'||'";
        case TokenKind::Not: return "'!'";
        case TokenKind::Eof: return "end of input";
    }
    return "?";
}

namespace {

const std::unordered_map<std::string_view, TokenKind>& keyword_table() {
    static const std::unordered_map<std::string_view, TokenKind> table = {
            {"class", TokenKind::KwClass},     {"if", TokenKind::KwIf},
            {"else", TokenKind::KwElse},       {"while", TokenKind::KwWhile},
            {"for", TokenKind::KwFor},         {"return", TokenKind::KwReturn},
            {"break", TokenKind::KwBreak},     {"continue", TokenKind::KwContinue},
            {"true", TokenKind::KwTrue},       {"false", TokenKind::KwFalse},
    };
    return table;
}

class Cursor {
public:
    explicit Cursor(std::string_view src) : src_(src) {}

    bool done() const { return index_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return index_ + ahead < src_.size() ? src_[index_ + ahead] : '\0';
    }
    SourcePos pos() const { return {line_, column_}; }

    char advance() {
        char c = src_[index_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    bool consume(char c) {
        if (!done() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

private:
    std::string_view src_;
    std::size_t index_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    Cursor cur(source);

    auto push = [&](TokenKind kind, std::string text, SourcePos pos) {
        tokens.push_back(Token{kind, std::move(text), pos});
    };

    while (!cur.done()) {
        SourcePos pos = cur.pos();
        char c = cur.peek();

        if (std::isspace(static_cast<unsigned char>(c))) {
            cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.done() && cur.peek() != '\n') {
                cur.advance();
            }
            continue;
        }
        if (c == '/' && cur.peek(1) == '*') {
            cur.advance();
            cur.advance();
            while (!cur.done() && !(cur.peek() == '*' && cur.peek(1) == '/')) {
                cur.advance();
            }
            if (cur.done()) {
                throw SyntaxError(pos, "unterminated block comment");
            }
            cur.advance();
            cur.advance();
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (!cur.done() && (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_')) {
                text += cur.advance();
            }
            auto it = keyword_table().find(text);
            push(it != keyword_table().end() ? it->second : TokenKind::Ident, std::move(text), pos);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                text += cur.advance();
            }
            push(TokenKind::IntLit, std::move(text), pos);
            continue;
        }

        cur.advance();
        switch (c) {
            case '{': push(TokenKind::LBrace, "{", pos); break;
            case '}': push(TokenKind::RBrace, "}", pos); break;
            case '(': push(TokenKind::LParen, "(", pos); break;
            case ')': push(TokenKind::RParen, ")", pos); break;
            case ';': push(TokenKind::Semi, ";", pos); break;
            case ',': push(TokenKind::Comma, ",", pos); break;
            case ':': push(TokenKind::Colon, ":", pos); break;
            case '+':
                if (cur.consume('+')) {
                    push(TokenKind::PlusPlus, "++", pos);
                } else if (cur.consume('=')) {
                    push(TokenKind::PlusAssign, "+=", pos);
                } else {
                    push(TokenKind::Plus, "+", pos);
                }
                break;
            case '-':
                if (cur.consume('-')) {
                    push(TokenKind::MinusMinus, "--", pos);
                } else if (cur.consume('=')) {
                    push(TokenKind::MinusAssign, "-=", pos);
                } else {
                    push(TokenKind::Minus, "-", pos);
                }
                break;
            case '*':
                if (cur.consume('=')) {
                    push(TokenKind::StarAssign, "*=", pos);
                } else {
                    push(TokenKind::Star, "*", pos);
                }
                break;
            case '/':
                if (cur.consume('=')) {
                    push(TokenKind::SlashAssign, "/=", pos);
                } else {
                    push(TokenKind::Slash, "/", pos);
                }
                break;
            case '%':
                if (cur.consume('=')) {
                    push(TokenKind::PercentAssign, "%=", pos);
                } else {
                    push(TokenKind::Percent, "%", pos);
                }
                break;
            case '<':
                if (cur.consume('=')) {
                    push(TokenKind::Le, "<=", pos);
                } else {
                    push(TokenKind::Lt, "<", pos);
                }
                break;
            case '>':
                if (cur.consume('=')) {
                    push(TokenKind::Ge, ">=", pos);
                } else {
                    push(TokenKind::Gt, ">", pos);
                }
                break;
            case '=':
                if (cur.consume('=')) {
                    push(TokenKind::EqEq, "==", pos);
                } else {
                    push(TokenKind::Assign, "=", pos);
                }
                break;
            case '!':
                if (cur.consume('=')) {
                    push(TokenKind::Ne, "!=", pos);
                } else {
                    push(TokenKind::Not, "!", pos);
                }
                break;
            case '&':
                if (cur.consume('&')) {
                    push(TokenKind::AndAnd, "&&", pos);
                } else {
                    throw SyntaxError(pos, "unexpected character '&'");
                }
                break;
            case '|':
                if (cur.consume('|')) {
                    push(TokenKind::OrOr, "||", pos);
                } else {
                    throw SyntaxError(pos, "unexpected character '|'");
                }
                break;
            default:
                throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
        }
    }

    tokens.push_back(Token{TokenKind::Eof, "", cur.pos()});
    return tokens;
}

}  // namespace flowgraph
