#include "flowgraph/flow_xml.hpp"

#include <map>
#include <sstream>

#include "flowgraph/errors.hpp"

namespace flowgraph {

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c; break;
        }
    }
    return out;
}

void write_graph(std::ostringstream& out, const FlowGraph& graph) {
    out << "  <graph class=\"" << xml_escape(graph.class_name()) << "\" method=\""
        << xml_escape(graph.method_name()) << "\">\n";
    for (const auto& var : graph.vars()) {
        out << "    <var name=\"" << xml_escape(var->name) << "\" origin=\""
            << (var->origin == VarOrigin::Param ? "param" : "local") << "\"/>\n";
    }
    for (const auto& instr : graph.instrs()) {
        out << "    <instr id=\"" << instr->id() << "\" kind=\""
            << instr_kind_name(instr->instr_kind()) << "\" txt=\"" << xml_escape(instr->txt())
            << "\"";
        bool empty = instr->defs().empty() && instr->uses().empty() && instr->cf_next().empty() &&
                     instr->df_next().empty();
        if (empty) {
            out << "/>\n";
            continue;
        }
        out << ">\n";
        for (const VarDef* var : instr->defs()) {
            out << "      <def var=\"" << xml_escape(var->name) << "\"/>\n";
        }
        for (const VarDef* var : instr->uses()) {
            out << "      <use var=\"" << xml_escape(var->name) << "\"/>\n";
        }
        for (const FlowInstr* next : instr->cf_next()) {
            out << "      <cfNext ref=\"" << next->id() << "\"/>\n";
        }
        for (const FlowInstr* next : instr->df_next()) {
            out << "      <dfNext ref=\"" << next->id() << "\"/>\n";
        }
        out << "    </instr>\n";
    }
    out << "  </graph>\n";
}

// --- minimal reader for the dialect above --------------------------------

struct XmlTag {
    std::string name;
    std::map<std::string, std::string> attrs;
    bool closing = false;      // </name>
    bool self_closing = false; // <name ... />
};

class XmlScanner {
public:
    explicit XmlScanner(std::string_view text) : text_(text) {}

    // returns false at end of input
    bool next(XmlTag& tag) {
        skip_outside_markup();
        if (pos_ >= text_.size()) {
            return false;
        }
        expect('<');
        tag = XmlTag{};
        if (peek() == '/') {
            ++pos_;
            tag.closing = true;
        }
        tag.name = read_name();
        while (true) {
            skip_spaces();
            char c = peek();
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '/') {
                ++pos_;
                expect('>');
                tag.self_closing = true;
                break;
            }
            std::string attr = read_name();
            skip_spaces();
            expect('=');
            skip_spaces();
            expect('"');
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                value += text_[pos_++];
            }
            expect('"');
            tag.attrs[attr] = unescape(value);
        }
        return true;
    }

private:
    void skip_outside_markup() {
        while (pos_ < text_.size()) {
            if (text_[pos_] == '<') {
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '?') {
                    // processing instruction, e.g. the XML declaration
                    while (pos_ < text_.size() && text_[pos_] != '>') {
                        ++pos_;
                    }
                    if (pos_ < text_.size()) {
                        ++pos_;
                    }
                    continue;
                }
                return;
            }
            if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                throw Error("xml: unexpected text content");
            }
            ++pos_;
        }
    }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw Error(std::string("xml: expected '") + c + "'");
        }
        ++pos_;
    }

    std::string read_name() {
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            name += text_[pos_++];
        }
        if (name.empty()) {
            throw Error("xml: expected a name");
        }
        return name;
    }

    static std::string unescape(const std::string& text) {
        std::string out;
        out.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '&') {
                out += text[i];
                continue;
            }
            auto end = text.find(';', i);
            if (end == std::string::npos) {
                throw Error("xml: unterminated entity");
            }
            std::string entity = text.substr(i + 1, end - i - 1);
            if (entity == "amp") out += '&';
            else if (entity == "lt") out += '<';
            else if (entity == "gt") out += '>';
            else if (entity == "quot") out += '"';
            else if (entity == "apos") out += '\'';
            else throw Error("xml: unknown entity '&" + entity + ";'");
            i = end;
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw Error(std::string("xml: invalid ") + what + " '" + text + "'");
    }
}

InstrKind parse_instr_kind(const std::string& text) {
    for (InstrKind k : {InstrKind::Method, InstrKind::Exit, InstrKind::Simple, InstrKind::Expr,
                        InstrKind::Return, InstrKind::Break, InstrKind::Continue, InstrKind::Label}) {
        if (text == instr_kind_name(k)) {
            return k;
        }
    }
    throw Error("xml: unknown instr kind '" + text + "'");
}

const std::string& require_attr(const XmlTag& tag, const char* name) {
    auto it = tag.attrs.find(name);
    if (it == tag.attrs.end()) {
        throw Error("xml: <" + tag.name + "> is missing attribute '" + name + "'");
    }
    return it->second;
}

}  // namespace

std::string serialize_xml(const FlowGraph& graph) {
    return serialize_xml(std::vector<const FlowGraph*>{&graph});
}

std::string serialize_xml(const std::vector<const FlowGraph*>& graphs) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<flowgraphs>\n";
    for (const FlowGraph* graph : graphs) {
        write_graph(out, *graph);
    }
    out << "</flowgraphs>\n";
    return out.str();
}

std::vector<std::unique_ptr<FlowGraph>> deserialize_xml(std::string_view text) {
    XmlScanner scanner(text);
    std::vector<std::unique_ptr<FlowGraph>> graphs;

    XmlTag tag;
    if (!scanner.next(tag) || tag.name != "flowgraphs" || tag.closing) {
        throw Error("xml: expected <flowgraphs> root element");
    }

    FlowGraph* graph = nullptr;
    FlowInstr* instr = nullptr;
    // edges are resolved after all instructions of a graph are known
    std::vector<std::pair<FlowInstr*, int>> cf_edges;
    std::vector<std::pair<FlowInstr*, int>> df_edges;

    auto finish_graph = [&]() {
        for (auto& [source, ref] : cf_edges) {
            FlowInstr* target = graph->find_instr(ref);
            if (target == nullptr) {
                throw Error("xml: cfNext ref " + std::to_string(ref) + " does not exist");
            }
            link_cf(*source, *target);
        }
        for (auto& [source, ref] : df_edges) {
            FlowInstr* target = graph->find_instr(ref);
            if (target == nullptr) {
                throw Error("xml: dfNext ref " + std::to_string(ref) + " does not exist");
            }
            link_df(*source, *target);
        }
        if (graph->method_instr() == nullptr || graph->exit_instr() == nullptr) {
            throw Error("xml: graph lacks a method or exit instruction");
        }
        cf_edges.clear();
        df_edges.clear();
        graph = nullptr;
    };

    while (scanner.next(tag)) {
        if (tag.name == "flowgraphs") {
            if (!tag.closing) {
                throw Error("xml: nested <flowgraphs>");
            }
            return graphs;
        }
        if (tag.name == "graph") {
            if (tag.closing) {
                finish_graph();
                continue;
            }
            graphs.push_back(std::make_unique<FlowGraph>(require_attr(tag, "class"),
                                                         require_attr(tag, "method")));
            graph = graphs.back().get();
            continue;
        }
        if (graph == nullptr) {
            throw Error("xml: <" + tag.name + "> outside of a <graph>");
        }
        if (tag.name == "var") {
            const std::string& origin = require_attr(tag, "origin");
            if (origin != "param" && origin != "local") {
                throw Error("xml: unknown var origin '" + origin + "'");
            }
            graph->new_var(require_attr(tag, "name"),
                           origin == "param" ? VarOrigin::Param : VarOrigin::Local);
            continue;
        }
        if (tag.name == "instr") {
            if (tag.closing) {
                instr = nullptr;
                continue;
            }
            int id = parse_int(require_attr(tag, "id"), "instr id");
            if (graph->find_instr(id) != nullptr) {
                throw Error("xml: duplicate instr id " + std::to_string(id));
            }
            InstrKind kind = parse_instr_kind(require_attr(tag, "kind"));
            FlowInstr& created = graph->new_instr_with_id(id, kind, require_attr(tag, "txt"));
            if (kind == InstrKind::Method) {
                if (graph->method_instr() != nullptr) {
                    throw Error("xml: graph has two method instructions");
                }
                graph->set_method_instr(&created);
            }
            if (kind == InstrKind::Exit) {
                if (graph->exit_instr() != nullptr) {
                    throw Error("xml: graph has two exit instructions");
                }
                graph->set_exit_instr(&created);
            }
            instr = tag.self_closing ? nullptr : &created;
            continue;
        }
        if (instr == nullptr) {
            throw Error("xml: <" + tag.name + "> outside of an <instr>");
        }
        if (tag.name == "def" || tag.name == "use") {
            const VarDef* var = graph->find_var(require_attr(tag, "var"));
            if (var == nullptr) {
                throw Error("xml: unknown variable '" + require_attr(tag, "var") + "'");
            }
            if (tag.name == "def") {
                instr->add_def(var);
            } else {
                instr->add_use(var);
            }
            continue;
        }
        if (tag.name == "cfNext") {
            cf_edges.emplace_back(instr, parse_int(require_attr(tag, "ref"), "cfNext ref"));
            continue;
        }
        if (tag.name == "dfNext") {
            df_edges.emplace_back(instr, parse_int(require_attr(tag, "ref"), "dfNext ref"));
            continue;
        }
        throw Error("xml: unexpected element <" + tag.name + ">");
    }
    throw Error("xml: missing </flowgraphs>");
}

}  // namespace flowgraph
