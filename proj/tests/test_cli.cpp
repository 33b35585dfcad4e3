#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "flowgraph/flow_xml.hpp"

using namespace flowgraph;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;

    TempDir() {
        path = fs::temp_directory_path() / ("flowgraph_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run(const std::string& args, const fs::path& stdout_to = {}, const fs::path& stderr_to = {}) {
    std::string command = std::string(FLOWGRAPH_CLI_PATH) + " " + args;
    if (!stdout_to.empty()) {
        command += " > " + stdout_to.string();
    }
    if (!stderr_to.empty()) {
        command += " 2> " + stderr_to.string();
    } else {
        command += " 2> /dev/null";
    }
    int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

const char* kProgram =
        "class C {\n"
        "  int f(int a) {\n"
        "    int b = a + 1;\n"
        "    return b;\n"
        "  }\n"
        "}\n";

}  // namespace

TEST_CASE("transform writes a loadable model") {
    TempDir tmp;
    write_file(tmp.path / "in.java", kProgram);
    int rc = run("transform " + (tmp.path / "in.java").string() + " -o " +
                 (tmp.path / "out.xml").string());
    CHECK(rc == 0);

    auto graphs = deserialize_xml(slurp(tmp.path / "out.xml"));
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0]->method_name() == "f");
    CHECK(graphs[0]->cf_edge_count() == 3);
    CHECK(graphs[0]->df_edge_count() == 2);
}

TEST_CASE("phase toggles") {
    TempDir tmp;
    write_file(tmp.path / "in.java", kProgram);

    int rc = run("transform " + (tmp.path / "in.java").string() + " --no-dataflow -o " +
                 (tmp.path / "nodf.xml").string());
    CHECK(rc == 0);
    auto graphs = deserialize_xml(slurp(tmp.path / "nodf.xml"));
    CHECK(graphs[0]->cf_edge_count() == 3);
    CHECK(graphs[0]->df_edge_count() == 0);

    rc = run("transform " + (tmp.path / "in.java").string() +
             " --no-controlflow --no-dataflow -o " + (tmp.path / "nocf.xml").string());
    CHECK(rc == 0);
    graphs = deserialize_xml(slurp(tmp.path / "nocf.xml"));
    CHECK(graphs[0]->cf_edge_count() == 0);

    // data flow needs control flow
    rc = run("transform " + (tmp.path / "in.java").string() + " --no-controlflow -o " +
             (tmp.path / "bad.xml").string());
    CHECK(rc == 1);
}

TEST_CASE("dot output modes") {
    TempDir tmp;
    write_file(tmp.path / "in.java", kProgram);
    int rc = run("transform " + (tmp.path / "in.java").string() +
                 " --format dot --edges both -o " + (tmp.path / "out.dot").string());
    CHECK(rc == 0);
    std::string dot = slurp(tmp.path / "out.dot");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("[style=dashed]") != std::string::npos);

    rc = run("transform " + (tmp.path / "in.java").string() + " --format dot --edges cf -o " +
             (tmp.path / "cf.dot").string());
    CHECK(rc == 0);
    CHECK(slurp(tmp.path / "cf.dot").find("style=dashed") == std::string::npos);
}

TEST_CASE("json ast input") {
    TempDir tmp;
    write_file(tmp.path / "in.json",
               R"({"classes":[{"name":"C","methods":[{"name":"m","params":[],
                   "body":{"kind":"block","statements":[{"kind":"return"}]}}]}]})");
    int rc = run("transform " + (tmp.path / "in.json").string() + " --ast-json -o " +
                 (tmp.path / "out.xml").string());
    CHECK(rc == 0);
    auto graphs = deserialize_xml(slurp(tmp.path / "out.xml"));
    CHECK(graphs[0]->instrs().size() == 3);
}

TEST_CASE("exit codes for bad input") {
    TempDir tmp;
    CHECK(run("transform " + (tmp.path / "missing.java").string()) == 2);

    write_file(tmp.path / "broken.java", "class C { void m() { int b = ; } }");
    CHECK(run("transform " + (tmp.path / "broken.java").string()) == 1);

    write_file(tmp.path / "unbound.java", "class C { void m() { x = 1; } }");
    CHECK(run("transform " + (tmp.path / "unbound.java").string()) == 1);
}

TEST_CASE("stats stream") {
    TempDir tmp;
    write_file(tmp.path / "in.java", kProgram);
    int rc = run("transform " + (tmp.path / "in.java").string() + " --stats -o " +
                         (tmp.path / "out.xml").string(),
                 {}, tmp.path / "stats.csv");
    CHECK(rc == 0);
    std::string stats = slurp(tmp.path / "stats.csv");
    CHECK(stats.find("phase,micros") != std::string::npos);
    CHECK(stats.find("read_input,") != std::string::npos);
    CHECK(stats.find("transformation,") != std::string::npos);
    CHECK(stats.find("derive_control_flow,") != std::string::npos);
    CHECK(stats.find("derive_data_flow,") != std::string::npos);
    CHECK(stats.find("write_output,") != std::string::npos);
}

TEST_CASE("validation against a transformed model") {
    TempDir tmp;
    write_file(tmp.path / "in.java", kProgram);
    REQUIRE(run("transform " + (tmp.path / "in.java").string() + " -o " +
                (tmp.path / "model.xml").string()) == 0);

    write_file(tmp.path / "good.txt",
               "cfNext: \"f()\" --> \"int b = a + 1\";\n"
               "dfNext: \"int b = a + 1\" --> \"return b\";\n"
               "cfPrev: \"Exit\" --> \"return b\";\n");
    int rc = run("validate " + (tmp.path / "model.xml").string() + " " +
                         (tmp.path / "good.txt").string(),
                 tmp.path / "report.txt");
    CHECK(rc == 0);
    std::string report = slurp(tmp.path / "report.txt");
    CHECK(report.find("holds\t1\t") != std::string::npos);
    CHECK(report.find("\"total\":3,\"holds\":3") != std::string::npos);

    write_file(tmp.path / "bad.txt", "cfNext: \"return b\" --> \"int b = a + 1\";\n");
    rc = run("validate " + (tmp.path / "model.xml").string() + " " +
                     (tmp.path / "bad.txt").string(),
             tmp.path / "report2.txt");
    CHECK(rc == 1);
    CHECK(slurp(tmp.path / "report2.txt").find("violated\t1\t") != std::string::npos);

    write_file(tmp.path / "malformed.txt", "cfNext \"a\" --> \"b\"\n");
    rc = run("validate " + (tmp.path / "model.xml").string() + " " +
             (tmp.path / "malformed.txt").string());
    CHECK(rc == 2);

    rc = run("validate " + (tmp.path / "nope.xml").string() + " " +
             (tmp.path / "good.txt").string());
    CHECK(rc == 2);
}

TEST_CASE("method selection on multi-method models") {
    TempDir tmp;
    write_file(tmp.path / "two.java",
               "class C {\n"
               "  void m() { return; }\n"
               "  void n() { return; }\n"
               "}\n");
    REQUIRE(run("transform " + (tmp.path / "two.java").string() + " -o " +
                (tmp.path / "model.xml").string()) == 0);
    write_file(tmp.path / "assert.txt", "cfNext: \"m()\" --> \"return\";\n");

    // without --method the selection is ambiguous
    CHECK(run("validate " + (tmp.path / "model.xml").string() + " " +
              (tmp.path / "assert.txt").string()) == 2);
    CHECK(run("validate " + (tmp.path / "model.xml").string() + " " +
              (tmp.path / "assert.txt").string() + " --method m") == 0);
    CHECK(run("validate " + (tmp.path / "model.xml").string() + " " +
              (tmp.path / "assert.txt").string() + " --method C.n") == 1);
    CHECK(run("validate " + (tmp.path / "model.xml").string() + " " +
              (tmp.path / "assert.txt").string() + " --method zz") == 2);
}

TEST_CASE("bench prints the phase table") {
    TempDir tmp;
    int rc = run("bench --sizes 0,10 --repeat 1", tmp.path / "bench.txt");
    CHECK(rc == 0);
    std::string table = slurp(tmp.path / "bench.txt");
    CHECK(table.find("size") != std::string::npos);
    CHECK(table.find("read_ms") != std::string::npos);
    CHECK(table.find("dataflow_ms") != std::string::npos);
    // one header plus one row per size
    CHECK(std::count(table.begin(), table.end(), '\n') == 3);
}
