#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "flowgraph/ast.hpp"

namespace flowgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the frontend on any input outside the language subset.
struct SyntaxError : Error {
    SourcePos pos;
    std::vector<std::string> expected;

    SyntaxError(SourcePos p, const std::string& what, std::vector<std::string> exp = {});
};

struct SemanticError : Error {
    SourcePos pos;

    SemanticError(SourcePos p, const std::string& what);
};

struct DuplicateDeclaration : SemanticError {
    std::string name;

    DuplicateDeclaration(SourcePos p, const std::string& n);
};

struct UnboundVariable : SemanticError {
    std::string name;

    UnboundVariable(SourcePos p, const std::string& n);
};

struct UnresolvedLabel : SemanticError {
    std::string label;

    UnresolvedLabel(SourcePos p, const std::string& l);
};

// JSON AST document violates the schema; path names the offending node,
// e.g. "classes[0].methods[0].name".
struct SchemaError : Error {
    std::string path;

    SchemaError(const std::string& p, const std::string& what);
};

struct CrossGraphLink : Error {
    CrossGraphLink();
};

struct RuleNotRegistered : Error {
    explicit RuleNotRegistered(const std::string& rule_name);
};

struct InstantiationConflict : Error {
    explicit InstantiationConflict(const std::string& what);
};

struct MalformedAssertion : Error {
    int line;
    std::string content;

    MalformedAssertion(int line_no, const std::string& text);
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace flowgraph
