#include "flowgraph/ast_printer.hpp"

#include <sstream>

#include "flowgraph/render.hpp"

namespace flowgraph {

namespace {

class SourcePrinter {
public:
    std::string print_unit(const CompilationUnit& unit) {
        for (const auto& cls : unit.classes) {
            line("class " + cls->name + " {");
            ++indent_;
            for (const auto& method : cls->methods) {
                print_method(*method);
            }
            --indent_;
            line("}");
        }
        return out_.str();
    }

    std::string print_method(const MethodDecl& method) {
        std::string header = "void " + method.name + "(";
        for (std::size_t i = 0; i < method.params.size(); ++i) {
            if (i > 0) {
                header += ", ";
            }
            header += method.params[i].type + " " + method.params[i].name;
        }
        header += ") {";
        line(header);
        ++indent_;
        for (const auto& s : method.body->statements) {
            print_stmt(*s);
        }
        --indent_;
        line("}");
        return out_.str();
    }

private:
    void line(const std::string& text) {
        for (int i = 0; i < indent_; ++i) {
            out_ << "    ";
        }
        out_ << text << "\n";
    }

    void print_stmt(const Statement& stmt) {
        switch (stmt.kind()) {
            case AstKind::Block: {
                line("{");
                ++indent_;
                for (const auto& s : static_cast<const Block&>(stmt).statements) {
                    print_stmt(*s);
                }
                --indent_;
                line("}");
                break;
            }
            case AstKind::LocalVarDecl: {
                auto& s = static_cast<const LocalVarDecl&>(stmt);
                if (s.init) {
                    std::string init = expr_to_text(*s.init);
                    line(decl_text(s.type, s.name, &init) + ";");
                } else {
                    line(decl_text(s.type, s.name, nullptr) + ";");
                }
                break;
            }
            case AstKind::ExprStmt:
                line(expr_to_text(*static_cast<const ExprStmt&>(stmt).expr) + ";");
                break;
            case AstKind::If: {
                auto& s = static_cast<const If&>(stmt);
                line("if (" + expr_to_text(*s.cond) + ")");
                if (s.else_branch && ends_with_elseless_if(*s.then_branch)) {
                    // brace the then branch so the printed else cannot bind
                    // to a nested if
                    line("{");
                    ++indent_;
                    print_stmt(*s.then_branch);
                    --indent_;
                    line("}");
                } else {
                    print_branch(*s.then_branch);
                }
                if (s.else_branch) {
                    line("else");
                    print_branch(*s.else_branch);
                }
                break;
            }
            case AstKind::While: {
                auto& s = static_cast<const While&>(stmt);
                line("while (" + expr_to_text(*s.cond) + ")");
                print_branch(*s.body);
                break;
            }
            case AstKind::For: {
                auto& s = static_cast<const For&>(stmt);
                std::string header = "for (";
                if (s.init) {
                    header += for_init_text(*s.init);
                }
                header += ";";
                if (s.cond) {
                    header += " " + expr_to_text(*s.cond);
                }
                header += ";";
                if (s.update) {
                    header += " " + expr_to_text(*s.update);
                }
                header += ")";
                line(header);
                print_branch(*s.body);
                break;
            }
            case AstKind::Return: {
                auto& s = static_cast<const Return&>(stmt);
                if (s.value) {
                    std::string v = expr_to_text(*s.value);
                    line(return_text(&v) + ";");
                } else {
                    line("return;");
                }
                break;
            }
            case AstKind::Break:
                line(jump_text("break", static_cast<const Break&>(stmt).label) + ";");
                break;
            case AstKind::Continue:
                line(jump_text("continue", static_cast<const Continue&>(stmt).label) + ";");
                break;
            case AstKind::Labeled: {
                auto& s = static_cast<const Labeled&>(stmt);
                line(s.label + ":");
                print_branch(*s.stmt);
                break;
            }
            case AstKind::Empty:
                line(";");
                break;
            default:
                break;
        }
    }

    // sub-statements of if/while/for/labeled get one extra indent level
    // unless they are blocks
    void print_branch(const Statement& stmt) {
        if (stmt.kind() == AstKind::Block) {
            print_stmt(stmt);
        } else {
            ++indent_;
            print_stmt(stmt);
            --indent_;
        }
    }

    static bool ends_with_elseless_if(const Statement& stmt) {
        switch (stmt.kind()) {
            case AstKind::If: {
                auto& s = static_cast<const If&>(stmt);
                return !s.else_branch || ends_with_elseless_if(*s.else_branch);
            }
            case AstKind::While:
                return ends_with_elseless_if(*static_cast<const While&>(stmt).body);
            case AstKind::For:
                return ends_with_elseless_if(*static_cast<const For&>(stmt).body);
            case AstKind::Labeled:
                return ends_with_elseless_if(*static_cast<const Labeled&>(stmt).stmt);
            default:
                return false;
        }
    }

    static std::string for_init_text(const Statement& init) {
        if (init.kind() == AstKind::LocalVarDecl) {
            auto& s = static_cast<const LocalVarDecl&>(init);
            if (s.init) {
                std::string text = expr_to_text(*s.init);
                return decl_text(s.type, s.name, &text);
            }
            return decl_text(s.type, s.name, nullptr);
        }
        return expr_to_text(*static_cast<const ExprStmt&>(init).expr);
    }

    std::ostringstream out_;
    int indent_ = 0;
};

}  // namespace

std::string to_java_source(const CompilationUnit& unit) { return SourcePrinter().print_unit(unit); }

std::string to_java_source(const MethodDecl& method) { return SourcePrinter().print_method(method); }

}  // namespace flowgraph
