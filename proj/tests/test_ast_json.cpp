#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowgraph/ast.hpp"
#include "flowgraph/ast_json.hpp"
#include "flowgraph/errors.hpp"
#include "flowgraph/parser.hpp"
#include "flowgraph/synth.hpp"
#include "flowgraph/ast_printer.hpp"

using namespace flowgraph;

TEST_CASE("empty class") {
    auto unit = load_ast_json(R"({"classes":[{"name":"C","methods":[]}]})");
    REQUIRE(unit->classes.size() == 1);
    CHECK(unit->classes[0]->name == "C");
    CHECK(unit->classes[0]->methods.empty());
}

TEST_CASE("loaded AST equals the parsed one") {
    auto parsed = parse_java("class C { int f(int a){ int b = a + 1; return b; } }");
    auto loaded = load_ast_json(R"({
      "classes": [{
        "name": "C",
        "methods": [{
          "name": "f",
          "params": [{"name": "a", "type": "int"}],
          "body": {"kind": "block", "statements": [
            {"kind": "localVar", "type": "int", "name": "b",
             "init": {"kind": "binary", "op": "+",
                      "left": {"kind": "varRef", "name": "a"},
                      "right": {"kind": "intLit", "value": 1}}},
            {"kind": "return", "expr": {"kind": "varRef", "name": "b"}}
          ]}
        }]
      }]
    })");
    CHECK(ast_equal(*parsed, *loaded));
}

TEST_CASE("schema violations name the offending path") {
    try {
        load_ast_json(R"({"classes":[{"name":"C","methods":[{"params":[],"body":{"kind":"block","statements":[]}}]}]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path == "classes[0].methods[0].name");
    }

    try {
        load_ast_json(R"({"classes":[{"name":"C","methods":[{"name":"m","params":[],
            "body":{"kind":"block","statements":[{"kind":"nope"}]}}]}]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path == "classes[0].methods[0].body.statements[0].kind");
    }

    CHECK_THROWS_AS(load_ast_json("not json at all"), SchemaError);
    CHECK_THROWS_AS(load_ast_json(R"({"classes":42})"), SchemaError);
    CHECK_THROWS_AS(load_ast_json(R"({})"), SchemaError);
    // unary increment needs a variable operand
    CHECK_THROWS_AS(load_ast_json(R"({"classes":[{"name":"C","methods":[{"name":"m","params":[],
        "body":{"kind":"block","statements":[{"kind":"exprStmt","expr":
          {"kind":"unary","op":"++pre","operand":{"kind":"intLit","value":1}}}]}}]}]})"),
                    SchemaError);
}

TEST_CASE("operator spellings") {
    auto unit = load_ast_json(R"({"classes":[{"name":"C","methods":[{"name":"m","params":[],
      "body":{"kind":"block","statements":[
        {"kind":"exprStmt","expr":{"kind":"assign","target":"a","op":"+=",
          "value":{"kind":"unary","op":"--post","operand":{"kind":"varRef","name":"a"}}}}
      ]}}]}]})");
    const auto& stmt = static_cast<const ExprStmt&>(*unit->classes[0]->methods[0]->body->statements[0]);
    const auto& assign = static_cast<const Assignment&>(*stmt.expr);
    CHECK(assign.op == AssignOp::AddAssign);
    CHECK(static_cast<const Unary&>(*assign.value).op == UnaryOp::PostDec);

    CHECK_THROWS_AS(load_ast_json(R"({"classes":[{"name":"C","methods":[{"name":"m","params":[],
      "body":{"kind":"block","statements":[{"kind":"exprStmt","expr":
        {"kind":"unary","op":"++","operand":{"kind":"varRef","name":"a"}}}]}}]}]})"),
                    SchemaError);
}

TEST_CASE("dump and load round trip") {
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        auto method = generate_random_method(seed, 12, 4);
        std::string source = "class G {\n" + to_java_source(*method) + "}\n";
        auto parsed = parse_java(source);
        auto reloaded = load_ast_json(dump_ast_json(*parsed));
        CHECK(ast_equal(*parsed, *reloaded));
    }
}

TEST_CASE("round trip preserves positions") {
    auto parsed = parse_java("class C {\n  void m() {\n    x = 1;\n  }\n}");
    auto reloaded = load_ast_json(dump_ast_json(*parsed));
    const auto& original = *parsed->classes[0]->methods[0]->body->statements[0];
    const auto& restored = *reloaded->classes[0]->methods[0]->body->statements[0];
    CHECK(original.pos.line == restored.pos.line);
    CHECK(original.pos.column == restored.pos.column);
}
