#include "flowgraph/validator.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "flowgraph/errors.hpp"

namespace flowgraph {

const char* assertion_command_name(AssertionCommand c) {
    switch (c) {
        case AssertionCommand::CfNext: return "cfNext";
        case AssertionCommand::CfPrev: return "cfPrev";
        case AssertionCommand::DfNext: return "dfNext";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::UnknownSource: return "unknown-source";
        case Verdict::UnknownTarget: return "unknown-target";
        case Verdict::Ambiguous: return "ambiguous";
    }
    return "?";
}

namespace {

const std::regex& assertion_pattern() {
    static const std::regex pattern(
            R"rx((cfNext|cfPrev|dfNext):\s*"([^"]*)"\s*-->\s*"([^"]*)"(;)?)rx");
    return pattern;
}

bool is_skippable(const std::string& line) {
    auto first = std::find_if(line.begin(), line.end(),
                              [](unsigned char c) { return !std::isspace(c); });
    return first == line.end() || *first == '#';
}

}  // namespace

std::vector<ValidationAssertion> parse_assertions(std::string_view text) {
    std::vector<ValidationAssertion> assertions;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;

    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (is_skippable(line)) {
            continue;
        }
        std::smatch match;
        if (!std::regex_search(line, match, assertion_pattern())) {
            throw MalformedAssertion(line_no, line);
        }
        ValidationAssertion assertion;
        const std::string command = match[1].str();
        assertion.command = command == "cfNext"   ? AssertionCommand::CfNext
                            : command == "cfPrev" ? AssertionCommand::CfPrev
                                                  : AssertionCommand::DfNext;
        assertion.source = match[2].str();
        assertion.target = match[3].str();
        assertion.line = line_no;
        assertion.text = line;
        assertions.push_back(std::move(assertion));
    }
    return assertions;
}

ValidationReport check(const FlowGraph& graph, const std::vector<ValidationAssertion>& assertions) {
    // txt-keyed instruction index, built once per run
    std::unordered_multimap<std::string, const FlowInstr*> by_txt;
    for (const auto& instr : graph.instrs()) {
        by_txt.emplace(instr->txt(), instr.get());
    }

    // 0 hits -> unknown, >1 hits -> ambiguous
    auto resolve = [&](const std::string& txt, const FlowInstr*& instr) {
        auto count = by_txt.count(txt);
        instr = count == 1 ? by_txt.find(txt)->second : nullptr;
        return count;
    };

    ValidationReport report;
    for (const ValidationAssertion& assertion : assertions) {
        const FlowInstr* source = nullptr;
        const FlowInstr* target = nullptr;
        std::size_t source_hits = resolve(assertion.source, source);
        std::size_t target_hits = resolve(assertion.target, target);

        Verdict verdict;
        if (source_hits == 0) {
            verdict = Verdict::UnknownSource;
        } else if (source_hits > 1) {
            verdict = Verdict::Ambiguous;
        } else if (target_hits == 0) {
            verdict = Verdict::UnknownTarget;
        } else if (target_hits > 1) {
            verdict = Verdict::Ambiguous;
        } else {
            const std::vector<FlowInstr*>* links = nullptr;
            switch (assertion.command) {
                case AssertionCommand::CfNext: links = &source->cf_next(); break;
                case AssertionCommand::CfPrev: links = &source->cf_prev(); break;
                case AssertionCommand::DfNext: links = &source->df_next(); break;
            }
            bool found = std::find(links->begin(), links->end(), target) != links->end();
            verdict = found ? Verdict::Holds : Verdict::Violated;
        }

        switch (verdict) {
            case Verdict::Holds: ++report.holds; break;
            case Verdict::Violated: ++report.violated; break;
            case Verdict::UnknownSource: ++report.unknown_source; break;
            case Verdict::UnknownTarget: ++report.unknown_target; break;
            case Verdict::Ambiguous: ++report.ambiguous; break;
        }
        report.entries.push_back(ValidationReport::Entry{assertion, verdict});
    }
    return report;
}

std::string render_report(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& entry : report.entries) {
        out << verdict_name(entry.verdict) << "\t" << entry.assertion.line << "\t"
            << entry.assertion.text << "\n";
    }
    return out.str();
}

std::string report_summary_json(const ValidationReport& report) {
    nlohmann::ordered_json summary;
    summary["total"] = report.total();
    summary["holds"] = report.holds;
    summary["violated"] = report.violated;
    summary["unknownSource"] = report.unknown_source;
    summary["unknownTarget"] = report.unknown_target;
    summary["ambiguous"] = report.ambiguous;
    return summary.dump();
}

}  // namespace flowgraph
