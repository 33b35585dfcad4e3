#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flowgraph/flow_model.hpp"

namespace flowgraph {

enum class AssertionCommand : std::uint8_t { CfNext, CfPrev, DfNext };

const char* assertion_command_name(AssertionCommand c);

struct ValidationAssertion {
    AssertionCommand command = AssertionCommand::CfNext;
    std::string source;
    std::string target;
    int line = 0;
    std::string text;  // the raw input line, for reporting
};

enum class Verdict : std::uint8_t { Holds, Violated, UnknownSource, UnknownTarget, Ambiguous };

const char* verdict_name(Verdict v);

struct ValidationReport {
    struct Entry {
        ValidationAssertion assertion;
        Verdict verdict = Verdict::Holds;
    };

    std::vector<Entry> entries;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t unknown_source = 0;
    std::size_t unknown_target = 0;
    std::size_t ambiguous = 0;

    std::size_t total() const { return entries.size(); }
    bool all_hold() const { return holds == total(); }
};

// One assertion per line:
//   (cfNext|cfPrev|dfNext):\s*"source"\s*-->\s*"target"(;)?
// matched anywhere in the line. Blank lines and lines whose first
// non-whitespace character is '#' are skipped. Throws MalformedAssertion
// for any other non-matching line.
std::vector<ValidationAssertion> parse_assertions(std::string_view text);

// Checks assertions against the graph's txt-keyed instruction index.
// Lookup failures become verdicts, never errors.
ValidationReport check(const FlowGraph& graph, const std::vector<ValidationAssertion>& assertions);

// Human-readable report: one "<verdict>\t<line>\t<assertion>" row per
// entry.
std::string render_report(const ValidationReport& report);

// {"total":n,"holds":n,"violated":n,"unknownSource":n,"unknownTarget":n,
//  "ambiguous":n}
std::string report_summary_json(const ValidationReport& report);

}  // namespace flowgraph
