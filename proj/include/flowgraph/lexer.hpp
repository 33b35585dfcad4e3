#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flowgraph/ast.hpp"

namespace flowgraph {

enum class TokenKind : std::uint8_t {
    Ident,
    IntLit,
    KwClass,
    KwIf,
    KwElse,
    KwWhile,
    KwFor,
    KwReturn,
    KwBreak,
    KwContinue,
    KwTrue,
    KwFalse,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Comma,
    Colon,
    Assign,
    PlusAssign,
    MinusAssign,
    StarAssign,
    SlashAssign,
    PercentAssign,
    PlusPlus,
    MinusMinus,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    Lt,
    Gt,
    Le,
    Ge,
    EqEq,
    Ne,
    AndAnd,
    OrOr,
    Not,
    Eof,
};

const char* token_kind_name(TokenKind k);

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string text;
    SourcePos pos;
};

// Tokenizes the whole input. Throws SyntaxError on any character sequence
// outside the subset's token set. Supports // and /* */ comments.
std::vector<Token> tokenize(std::string_view source);

}  // namespace flowgraph
