#include "flowgraph/errors.hpp"

#include <sstream>

namespace flowgraph {

namespace {

std::string at_pos(SourcePos p, const std::string& what) {
    std::ostringstream os;
    os << p.line << ":" << p.column << ": " << what;
    return os.str();
}

}  // namespace

SyntaxError::SyntaxError(SourcePos p, const std::string& what, std::vector<std::string> exp)
        : Error(at_pos(p, what)), pos(p), expected(std::move(exp)) {}

SemanticError::SemanticError(SourcePos p, const std::string& what) : Error(at_pos(p, what)), pos(p) {}

DuplicateDeclaration::DuplicateDeclaration(SourcePos p, const std::string& n)
        : SemanticError(p, "duplicate declaration of '" + n + "'"), name(n) {}

UnboundVariable::UnboundVariable(SourcePos p, const std::string& n)
        : SemanticError(p, "unbound variable '" + n + "'"), name(n) {}

UnresolvedLabel::UnresolvedLabel(SourcePos p, const std::string& l)
        : SemanticError(p, l.empty() ? std::string("jump outside of any loop")
                                     : "unresolved label '" + l + "'"),
          label(l) {}

SchemaError::SchemaError(const std::string& p, const std::string& what)
        : Error(p + ": " + what), path(p) {}

CrossGraphLink::CrossGraphLink() : Error("control flow link crosses graph boundaries") {}

RuleNotRegistered::RuleNotRegistered(const std::string& rule_name)
        : Error("rule '" + rule_name + "' is not registered in this context") {}

InstantiationConflict::InstantiationConflict(const std::string& what) : Error(what) {}

MalformedAssertion::MalformedAssertion(int line_no, const std::string& text)
        : Error("line " + std::to_string(line_no) + ": malformed assertion: " + text),
          line(line_no),
          content(text) {}

}  // namespace flowgraph
