#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flowgraph/control_flow.hpp"
#include "flowgraph/data_flow.hpp"
#include "flowgraph/parser.hpp"
#include "flowgraph/structure_transform.hpp"
#include "flowgraph/synth.hpp"

using namespace flowgraph;

namespace {

std::shared_ptr<FlowGraph> graph_for(const MethodDecl& method) {
    TransformationContext context;
    StructurePass structure(context);
    structure.build(method, "G");
    ControlFlowPass cf(context, structure);
    return cf.derive(method);
}

std::shared_ptr<FlowGraph> graph_for_source(const std::string& source,
                                            std::unique_ptr<CompilationUnit>& unit) {
    unit = parse_java(source);
    return graph_for(*unit->classes[0]->methods[0]);
}

using NamedEdge = std::tuple<std::string, std::string, std::string>;

std::set<NamedEdge> named(const std::vector<DefUseEdge>& edges) {
    std::set<NamedEdge> out;
    for (const auto& [def_instr, use_instr, var] : edges) {
        out.insert({def_instr->txt(), use_instr->txt(), var->name});
    }
    return out;
}

std::set<NamedEdge> df_links(const FlowGraph& graph) {
    std::set<NamedEdge> out;
    for (const auto& instr : graph.instrs()) {
        for (const FlowInstr* next : instr->df_next()) {
            out.insert({instr->txt(), next->txt(), ""});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parameters flow into their uses") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source("class C { int f(int a){ int b = a + 1; return b; } }", unit);
    derive_data_flow(*graph);

    CHECK(df_links(*graph) == std::set<NamedEdge>{{"f()", "int b = a + 1", ""},
                                                  {"int b = a + 1", "return b", ""}});
    CHECK(named(traversal_def_use_edges(*graph)) ==
          std::set<NamedEdge>{{"f()", "int b = a + 1", "a"}, {"int b = a + 1", "return b", "b"}});
}

TEST_CASE("a redefinition ends the earlier definition") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source("class C { int m(){ int a = 1; a = 2; return a; } }", unit);
    derive_data_flow(*graph);
    CHECK(df_links(*graph) == std::set<NamedEdge>{{"a = 2", "return a", ""}});
}

TEST_CASE("definitions reach around loop back edges") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source(
            "class C { int m(){ int a = 0; while (a < 3) { a = a + 1; } return a; } }", unit);

    auto edges = named(traversal_def_use_edges(*graph));
    CHECK(edges == std::set<NamedEdge>{
                  {"int a = 0", "a < 3", "a"},
                  {"int a = 0", "a = a + 1", "a"},
                  {"int a = 0", "return a", "a"},
                  {"a = a + 1", "a < 3", "a"},
                  {"a = a + 1", "a = a + 1", "a"},
                  {"a = a + 1", "return a", "a"},
          });
}

TEST_CASE("a graph without defs has no data flow") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source("class C { void m(){ f0(); f1(); } }", unit);
    CHECK(traversal_def_use_edges(*graph).empty());
    CHECK(oracle_reaching_defs(*graph).empty());
    derive_data_flow(*graph);
    CHECK(graph->df_edge_count() == 0);
}

TEST_CASE("self loop with use before kill reaches itself") {
    FlowGraph graph("C", "m");
    FlowInstr& method = graph.new_instr(InstrKind::Method, "m()");
    graph.set_method_instr(&method);
    FlowInstr& d = graph.new_instr(InstrKind::Simple, "v = v + 1");
    const VarDef& var = graph.new_var("v", VarOrigin::Local);
    d.add_def(&var);
    d.add_use(&var);
    FlowInstr& exit = graph.new_instr(InstrKind::Exit, "Exit");
    graph.set_exit_instr(&exit);
    link_cf(method, d);
    link_cf(d, d);  // self loop
    link_cf(d, exit);

    auto oracle = named(oracle_reaching_defs(graph));
    CHECK(oracle == std::set<NamedEdge>{{"v = v + 1", "v = v + 1", "v"}});
    CHECK(named(traversal_def_use_edges(graph)) == oracle);
}

TEST_CASE("dead code receives no definitions") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source("class C { int m(){ int a = 1; return a; a = 2; } }", unit);
    auto edges = named(traversal_def_use_edges(*graph));
    CHECK(edges == std::set<NamedEdge>{{"int a = 1", "return a", "a"}});
    CHECK(named(oracle_reaching_defs(*graph)) == edges);
}

TEST_CASE("branches merge their reaching definitions") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source(
            "class C { int m(int c){"
            "  int a = 0;"
            "  if (c > 0) { a = 1; } else { a = 2; }"
            "  return a;"
            "} }",
            unit);
    auto edges = named(traversal_def_use_edges(*graph));
    // "int a = 0" is killed on both branches and reaches nothing
    CHECK(edges == std::set<NamedEdge>{
                  {"m()", "c > 0", "c"},
                  {"a = 1", "return a", "a"},
                  {"a = 2", "return a", "a"},
          });
    CHECK(named(oracle_reaching_defs(*graph)) == edges);
}

TEST_CASE("traversal equals the oracle on generated methods") {
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        auto method = generate_random_method(seed, 12, 4);
        auto graph = graph_for(*method);
        CAPTURE(seed);
        CHECK(traversal_def_use_edges(*graph) == oracle_reaching_defs(*graph));
    }
}

TEST_CASE("both derivation modes set identical df links") {
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
        auto method = generate_random_method(seed, 12, 4);

        auto traversal_graph = graph_for(*method);
        derive_data_flow(*traversal_graph);

        auto fixpoint_graph = graph_for(*method);
        derive_data_flow_fixpoint(*fixpoint_graph);

        CAPTURE(seed);
        CHECK(df_links(*traversal_graph) == df_links(*fixpoint_graph));
    }
}

TEST_CASE("df edges connect definition sites to use sites") {
    std::unique_ptr<CompilationUnit> unit;
    auto graph = graph_for_source(
            "class C { int m(int c){ int s = 0; for (int i = 0; i < c; i = i + 1) { s = s + i; }"
            " return s; } }",
            unit);
    auto edges = traversal_def_use_edges(*graph);
    derive_data_flow(*graph);
    std::set<std::pair<const FlowInstr*, const FlowInstr*>> expected;
    for (const auto& [d, u, v] : edges) {
        expected.insert({d, u});
    }
    std::set<std::pair<const FlowInstr*, const FlowInstr*>> actual;
    for (const auto& instr : graph->instrs()) {
        for (const FlowInstr* next : instr->df_next()) {
            actual.insert({instr.get(), next});
        }
    }
    CHECK(expected == actual);
}
