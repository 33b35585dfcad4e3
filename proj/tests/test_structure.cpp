#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowgraph/ast_printer.hpp"
#include "flowgraph/errors.hpp"
#include "flowgraph/parser.hpp"
#include "flowgraph/structure_transform.hpp"
#include "flowgraph/synth.hpp"

using namespace flowgraph;

namespace {

const MethodDecl& sole_method(const CompilationUnit& unit) {
    REQUIRE(unit.classes.size() == 1);
    REQUIRE(unit.classes[0]->methods.size() == 1);
    return *unit.classes[0]->methods[0];
}

std::vector<std::string> instr_txts(const FlowGraph& graph) {
    std::vector<std::string> txts;
    for (const auto& instr : graph.instrs()) {
        txts.push_back(instr->txt());
    }
    return txts;
}

std::vector<std::string> names(const std::vector<const VarDef*>& vars) {
    std::vector<std::string> out;
    for (const VarDef* var : vars) {
        out.push_back(var->name);
    }
    return out;
}

const FlowInstr& instr_by_txt(const FlowGraph& graph, const std::string& txt) {
    const FlowInstr* found = nullptr;
    for (const auto& instr : graph.instrs()) {
        if (instr->txt() == txt) {
            REQUIRE(found == nullptr);
            found = instr.get();
        }
    }
    REQUIRE(found != nullptr);
    return *found;
}

// independent census of instruction-contributing constructs
struct Census {
    int conditions = 0;
    int simple = 0;  // decls, expr statements, returns, breaks, continues, for updates
    std::vector<std::string> defined;  // declared/assigned names per instruction site

    void count_expr_defs(const Expression& e) {
        if (e.kind() == AstKind::Assignment) {
            defined.push_back(static_cast<const Assignment&>(e).target);
        } else if (e.kind() == AstKind::Unary) {
            const auto& u = static_cast<const Unary&>(e);
            if (u.op != UnaryOp::Neg && u.op != UnaryOp::Not) {
                defined.push_back(static_cast<const VarRef&>(*u.operand).name);
            }
        }
    }

    void visit(const Statement& stmt) {
        switch (stmt.kind()) {
            case AstKind::Block:
                for (const auto& child : static_cast<const Block&>(stmt).statements) {
                    visit(*child);
                }
                break;
            case AstKind::LocalVarDecl:
                ++simple;
                defined.push_back(static_cast<const LocalVarDecl&>(stmt).name);
                break;
            case AstKind::ExprStmt:
                ++simple;
                count_expr_defs(*static_cast<const ExprStmt&>(stmt).expr);
                break;
            case AstKind::If: {
                const auto& s = static_cast<const If&>(stmt);
                ++conditions;
                count_expr_defs(*s.cond);
                visit(*s.then_branch);
                if (s.else_branch) {
                    visit(*s.else_branch);
                }
                break;
            }
            case AstKind::While: {
                const auto& s = static_cast<const While&>(stmt);
                ++conditions;
                count_expr_defs(*s.cond);
                visit(*s.body);
                break;
            }
            case AstKind::For: {
                const auto& s = static_cast<const For&>(stmt);
                if (s.init) {
                    visit(*s.init);
                }
                if (s.cond) {
                    ++conditions;
                    count_expr_defs(*s.cond);
                }
                if (s.update) {
                    ++simple;
                    count_expr_defs(*s.update);
                }
                visit(*s.body);
                break;
            }
            case AstKind::Return: {
                ++simple;
                const auto& s = static_cast<const Return&>(stmt);
                if (s.value) {
                    count_expr_defs(*s.value);
                }
                break;
            }
            case AstKind::Break:
            case AstKind::Continue:
                ++simple;
                break;
            case AstKind::Labeled:
                visit(*static_cast<const Labeled&>(stmt).stmt);
                break;
            default:
                break;
        }
    }
};

}  // namespace

TEST_CASE("empty method yields only entry and exit") {
    auto unit = parse_java("class C { void m() { } }");
    TransformationContext context;
    StructurePass pass(context);
    auto graph = pass.build(sole_method(*unit), "C");
    CHECK(instr_txts(*graph) == std::vector<std::string>{"m()", "Exit"});
    CHECK(graph->cf_edge_count() == 0);
    CHECK(graph->method_instr()->instr_kind() == InstrKind::Method);
    CHECK(graph->exit_instr()->instr_kind() == InstrKind::Exit);
}

TEST_CASE("declaration and return example") {
    auto unit = parse_java("class C { int f(int a){ int b = a + 1; return b; } }");
    TransformationContext context;
    StructurePass pass(context);
    auto graph = pass.build(sole_method(*unit), "C");

    CHECK(instr_txts(*graph) ==
          std::vector<std::string>{"f()", "int b = a + 1", "return b", "Exit"});

    const FlowInstr& entry = *graph->method_instr();
    CHECK(names(entry.defs()) == std::vector<std::string>{"a"});

    const FlowInstr& decl = instr_by_txt(*graph, "int b = a + 1");
    CHECK(names(decl.defs()) == std::vector<std::string>{"b"});
    CHECK(names(decl.uses()) == std::vector<std::string>{"a"});

    const FlowInstr& ret = instr_by_txt(*graph, "return b");
    CHECK(ret.defs().empty());
    CHECK(names(ret.uses()) == std::vector<std::string>{"b"});

    // no edges yet
    CHECK(graph->cf_edge_count() == 0);
    CHECK(graph->df_edge_count() == 0);
}

TEST_CASE("loop condition becomes an expr instruction") {
    auto unit = parse_java("class C { void m(int a){ while (a < 3) { a = a + 1; } } }");
    TransformationContext context;
    StructurePass pass(context);
    auto graph = pass.build(sole_method(*unit), "C");

    const FlowInstr& cond = instr_by_txt(*graph, "a < 3");
    CHECK(cond.instr_kind() == InstrKind::Expr);
    CHECK(names(cond.uses()) == std::vector<std::string>{"a"});
    CHECK(cond.defs().empty());

    const FlowInstr& body = instr_by_txt(*graph, "a = a + 1");
    CHECK(body.instr_kind() == InstrKind::Simple);
    CHECK(names(body.defs()) == std::vector<std::string>{"a"});
    CHECK(names(body.uses()) == std::vector<std::string>{"a"});
}

TEST_CASE("for loops contribute init, condition, and update instructions") {
    auto unit = parse_java(
            "class C { void m(){ for (int i = 0; i < 3; i = i + 1) { i = i * 2; } } }");
    TransformationContext context;
    StructurePass pass(context);
    auto graph = pass.build(sole_method(*unit), "C");
    CHECK(instr_txts(*graph) == std::vector<std::string>{"m()", "int i = 0", "i < 3", "i = i + 1",
                                                         "i = i * 2", "Exit"});
    CHECK(instr_by_txt(*graph, "i < 3").instr_kind() == InstrKind::Expr);
    CHECK(instr_by_txt(*graph, "i = i + 1").instr_kind() == InstrKind::Simple);
}

TEST_CASE("statement rendering conventions") {
    auto unit = parse_java(
            "class C { void m(int a){"
            "  int b;"
            "  b = a;"
            "  L: while (a < 1) { break L; continue; }"
            "  if (a == 1) { return; }"
            "  return a;"
            "} }");
    TransformationContext context;
    StructurePass pass(context);
    auto graph = pass.build(sole_method(*unit), "C");
    CHECK(instr_txts(*graph) ==
          std::vector<std::string>{"m()", "int b", "b = a", "a < 1", "break L", "continue",
                                   "a == 1", "return", "return a", "Exit"});
    CHECK(instr_by_txt(*graph, "break L").instr_kind() == InstrKind::Break);
    CHECK(instr_by_txt(*graph, "continue").instr_kind() == InstrKind::Continue);
    CHECK(instr_by_txt(*graph, "return").instr_kind() == InstrKind::Return);
}

TEST_CASE("building twice in one context returns the identical graph") {
    auto unit = parse_java("class C { void m() { int x1 = 1; } }");
    TransformationContext context;
    StructurePass pass(context);
    const MethodDecl& method = sole_method(*unit);
    auto first = pass.build(method, "C");
    auto second = pass.build(method, "C");
    CHECK(first.get() == second.get());
}

TEST_CASE("semantic errors surface during the build") {
    TransformationContext context;
    StructurePass pass(context);

    auto unbound = parse_java("class C { void m() { x = 1; } }");
    CHECK_THROWS_AS(pass.build(sole_method(*unbound), "C"), UnboundVariable);

    TransformationContext context2;
    StructurePass pass2(context2);
    auto duplicate = parse_java("class C { void m(int a) { int a = 1; } }");
    CHECK_THROWS_AS(pass2.build(sole_method(*duplicate), "C"), DuplicateDeclaration);

    // a declaration's own initializer cannot read the declared name
    TransformationContext context3;
    StructurePass pass3(context3);
    auto self_ref = parse_java("class C { void m() { int b = b + 1; } }");
    CHECK_THROWS_AS(pass3.build(sole_method(*self_ref), "C"), UnboundVariable);
}

TEST_CASE("instruction counts match an independent census") {
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        auto method = generate_random_method(seed, 12, 4);
        Census census;
        census.visit(*method->body);

        TransformationContext context;
        StructurePass pass(context);
        auto graph = pass.build(*method, "G");

        CAPTURE(seed);
        CHECK(static_cast<int>(graph->instrs().size()) == 2 + census.conditions + census.simple);

        // every instruction carries a non-empty label
        for (const auto& instr : graph->instrs()) {
            CHECK(!instr->txt().empty());
        }

        // defined variables match the independent statement-level predicate
        std::vector<std::string> expected = census.defined;
        for (const auto& param : method->params) {
            expected.push_back(param.name);
        }
        std::vector<std::string> actual;
        for (const auto& instr : graph->instrs()) {
            for (const VarDef* var : instr->defs()) {
                actual.push_back(var->name);
            }
        }
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        CHECK(expected == actual);
    }
}
