#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowgraph/errors.hpp"
#include "flowgraph/flow_dot.hpp"
#include "flowgraph/flow_model.hpp"
#include "flowgraph/flow_xml.hpp"

using namespace flowgraph;

namespace {

// method -> "return" -> Exit, with one variable
std::unique_ptr<FlowGraph> chain_graph() {
    auto graph = std::make_unique<FlowGraph>("C", "m");
    FlowInstr& method = graph->new_instr(InstrKind::Method, "m()");
    graph->set_method_instr(&method);
    const VarDef& var = graph->new_var("a", VarOrigin::Param);
    method.add_def(&var);
    FlowInstr& ret = graph->new_instr(InstrKind::Return, "return a");
    ret.add_use(&var);
    FlowInstr& exit = graph->new_instr(InstrKind::Exit, "Exit");
    graph->set_exit_instr(&exit);
    link_cf(method, ret);
    link_cf(ret, exit);
    link_df(method, ret);
    return graph;
}

}  // namespace

TEST_CASE("link_cf is idempotent") {
    FlowGraph graph("C", "m");
    FlowInstr& a = graph.new_instr(InstrKind::Simple, "a");
    FlowInstr& b = graph.new_instr(InstrKind::Simple, "b");
    link_cf(a, b);
    link_cf(a, b);
    CHECK(a.cf_next() == std::vector<FlowInstr*>{&b});
    CHECK(b.cf_prev() == std::vector<FlowInstr*>{&a});
}

TEST_CASE("cycles keep both inverse sets consistent") {
    FlowGraph graph("C", "m");
    FlowInstr& a = graph.new_instr(InstrKind::Simple, "a");
    FlowInstr& b = graph.new_instr(InstrKind::Simple, "b");
    link_cf(a, b);
    link_cf(b, a);
    CHECK(a.cf_next() == std::vector<FlowInstr*>{&b});
    CHECK(a.cf_prev() == std::vector<FlowInstr*>{&b});
    CHECK(b.cf_next() == std::vector<FlowInstr*>{&a});
    CHECK(b.cf_prev() == std::vector<FlowInstr*>{&a});
}

TEST_CASE("links may not cross graphs") {
    FlowGraph g1("C", "m");
    FlowGraph g2("C", "n");
    FlowInstr& a = g1.new_instr(InstrKind::Simple, "a");
    FlowInstr& b = g2.new_instr(InstrKind::Simple, "b");
    CHECK_THROWS_AS(link_cf(a, b), CrossGraphLink);
    CHECK_THROWS_AS(link_df(a, b), CrossGraphLink);
}

TEST_CASE("the auditor accepts the chain and flags broken graphs") {
    auto graph = chain_graph();
    CHECK_NOTHROW(audit_graph(*graph));

    FlowGraph bad("C", "m");
    FlowInstr& method = bad.new_instr(InstrKind::Method, "m()");
    bad.set_method_instr(&method);
    FlowInstr& exit = bad.new_instr(InstrKind::Exit, "Exit");
    bad.set_exit_instr(&exit);
    link_cf(exit, method);  // exit must not have successors
    CHECK_THROWS_AS(audit_graph(bad), Error);
}

TEST_CASE("xml round trip preserves identity") {
    auto graph = chain_graph();
    std::string first = serialize_xml(*graph);
    auto loaded = deserialize_xml(first);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0]->class_name() == "C");
    CHECK(loaded[0]->method_name() == "m");
    CHECK(loaded[0]->instrs().size() == 3);
    CHECK(loaded[0]->method_instr()->id() == graph->method_instr()->id());
    CHECK(loaded[0]->exit_instr()->cf_next().empty());
    // ids survive, so the reloaded graph serializes identically
    CHECK(serialize_xml(*loaded[0]) == first);
    // and the inverse links were rebuilt
    CHECK_NOTHROW(audit_graph(*loaded[0]));
}

TEST_CASE("serialization is deterministic") {
    auto graph = chain_graph();
    CHECK(serialize_xml(*graph) == serialize_xml(*graph));
    CHECK(serialize_dot(*graph, EdgeSet::Both) == serialize_dot(*graph, EdgeSet::Both));
}

TEST_CASE("xml escapes markup in txt") {
    FlowGraph graph("C", "m");
    FlowInstr& method = graph.new_instr(InstrKind::Method, "m()");
    graph.set_method_instr(&method);
    FlowInstr& cond = graph.new_instr(InstrKind::Expr, "a < b && c > \"x\"");
    FlowInstr& exit = graph.new_instr(InstrKind::Exit, "Exit");
    graph.set_exit_instr(&exit);
    (void)cond;

    std::string xml = serialize_xml(graph);
    CHECK(xml.find("a &lt; b &amp;&amp; c &gt; &quot;x&quot;") != std::string::npos);
    auto loaded = deserialize_xml(xml);
    CHECK(loaded[0]->instrs()[1]->txt() == "a < b && c > \"x\"");
}

TEST_CASE("dot output for the chain") {
    auto graph = chain_graph();
    std::string dot = serialize_dot(*graph, EdgeSet::Cf);
    CHECK(dot == "digraph \"C.m\" {\n"
                 "  n0 [label=\"m()\"];\n"
                 "  n1 [label=\"return a\"];\n"
                 "  n2 [label=\"Exit\"];\n"
                 "  n0 -> n1;\n"
                 "  n1 -> n2;\n"
                 "}\n");

    // cf edges are solid, df edges dashed
    std::string both = serialize_dot(*graph, EdgeSet::Both);
    CHECK(both.find("n0 -> n1 [style=dashed];") != std::string::npos);

    // df output on a graph without df edges holds nodes only
    FlowGraph plain("C", "n");
    FlowInstr& method = plain.new_instr(InstrKind::Method, "n()");
    plain.set_method_instr(&method);
    FlowInstr& exit = plain.new_instr(InstrKind::Exit, "Exit");
    plain.set_exit_instr(&exit);
    link_cf(method, exit);
    std::string df_only = serialize_dot(plain, EdgeSet::Df);
    CHECK(df_only.find("->") == std::string::npos);
    CHECK(df_only.find("n0") != std::string::npos);
}

TEST_CASE("dot escapes quotes and backslashes in labels") {
    FlowGraph graph("C", "m");
    FlowInstr& method = graph.new_instr(InstrKind::Method, "m()");
    graph.set_method_instr(&method);
    FlowInstr& odd = graph.new_instr(InstrKind::Simple, "say \"hi\\\" now");
    FlowInstr& exit = graph.new_instr(InstrKind::Exit, "Exit");
    graph.set_exit_instr(&exit);
    (void)odd;

    std::string dot = serialize_dot(graph, EdgeSet::Cf);
    CHECK(dot.find("label=\"say \\\"hi\\\\\\\" now\"") != std::string::npos);
}

TEST_CASE("multiple graphs nest under one xml root") {
    auto g1 = chain_graph();
    FlowGraph g2("C", "n");
    FlowInstr& method = g2.new_instr(InstrKind::Method, "n()");
    g2.set_method_instr(&method);
    FlowInstr& exit = g2.new_instr(InstrKind::Exit, "Exit");
    g2.set_exit_instr(&exit);

    std::string xml = serialize_xml(std::vector<const FlowGraph*>{g1.get(), &g2});
    auto loaded = deserialize_xml(xml);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0]->method_name() == "m");
    CHECK(loaded[1]->method_name() == "n");
}

TEST_CASE("defs and uses are deduplicated") {
    FlowGraph graph("C", "m");
    FlowInstr& instr = graph.new_instr(InstrKind::Simple, "x");
    const VarDef& var = graph.new_var("v", VarOrigin::Local);
    instr.add_use(&var);
    instr.add_use(&var);
    instr.add_def(&var);
    instr.add_def(&var);
    CHECK(instr.uses().size() == 1);
    CHECK(instr.defs().size() == 1);
    CHECK(instr.uses_var(&var));
    CHECK(instr.defines(&var));
}
