#include "flowgraph/ast_json.hpp"

#include <json.hpp>

#include "flowgraph/errors.hpp"

namespace flowgraph {

namespace {

using nlohmann::json;

// --- loading -------------------------------------------------------------

const json& field(const json& obj, const char* name, const std::string& path) {
    if (!obj.is_object()) {
        throw SchemaError(path, "expected an object");
    }
    auto it = obj.find(name);
    if (it == obj.end() || it->is_null()) {
        throw SchemaError(path + "." + name, "missing required field");
    }
    return *it;
}

const json* optional_field(const json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end() || it->is_null()) {
        return nullptr;
    }
    return &*it;
}

std::string get_string(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw SchemaError(path, "expected a string");
    }
    return value.get<std::string>();
}

void read_pos(const json& obj, AstNode& node) {
    if (const json* line = optional_field(obj, "line")) {
        node.pos.line = line->is_number_integer() ? line->get<int>() : 0;
    }
    if (const json* col = optional_field(obj, "col")) {
        node.pos.column = col->is_number_integer() ? col->get<int>() : 0;
    }
}

ExprPtr load_expr(const json& obj, const std::string& path);
StmtPtr load_stmt(const json& obj, const std::string& path);

AssignOp parse_assign_op(const std::string& text, const std::string& path) {
    if (text == "=") return AssignOp::Assign;
    if (text == "+=") return AssignOp::AddAssign;
    if (text == "-=") return AssignOp::SubAssign;
    if (text == "*=") return AssignOp::MulAssign;
    if (text == "/=") return AssignOp::DivAssign;
    if (text == "%=") return AssignOp::ModAssign;
    throw SchemaError(path, "unknown assignment operator '" + text + "'");
}

BinaryOp parse_binary_op(const std::string& text, const std::string& path) {
    if (text == "+") return BinaryOp::Add;
    if (text == "-") return BinaryOp::Sub;
    if (text == "*") return BinaryOp::Mul;
    if (text == "/") return BinaryOp::Div;
    if (text == "%") return BinaryOp::Mod;
    if (text == "<") return BinaryOp::Lt;
    if (text == ">") return BinaryOp::Gt;
    if (text == "<=") return BinaryOp::Le;
    if (text == ">=") return BinaryOp::Ge;
    if (text == "==") return BinaryOp::Eq;
    if (text == "!=") return BinaryOp::Ne;
    if (text == "&&") return BinaryOp::And;
    if (text == "||") return BinaryOp::Or;
    throw SchemaError(path, "unknown binary operator '" + text + "'");
}

UnaryOp parse_unary_op(const std::string& text, const std::string& path) {
    if (text == "-") return UnaryOp::Neg;
    if (text == "!") return UnaryOp::Not;
    if (text == "++pre") return UnaryOp::PreInc;
    if (text == "--pre") return UnaryOp::PreDec;
    if (text == "++post") return UnaryOp::PostInc;
    if (text == "--post") return UnaryOp::PostDec;
    throw SchemaError(path, "unknown unary operator '" + text + "'");
}

ExprPtr load_expr(const json& obj, const std::string& path) {
    std::string kind = get_string(field(obj, "kind", path), path + ".kind");
    if (kind == "assign") {
        auto e = std::make_unique<Assignment>();
        read_pos(obj, *e);
        e->target = get_string(field(obj, "target", path), path + ".target");
        e->op = parse_assign_op(get_string(field(obj, "op", path), path + ".op"), path + ".op");
        e->value = load_expr(field(obj, "value", path), path + ".value");
        return e;
    }
    if (kind == "binary") {
        auto e = std::make_unique<Binary>();
        read_pos(obj, *e);
        e->op = parse_binary_op(get_string(field(obj, "op", path), path + ".op"), path + ".op");
        e->left = load_expr(field(obj, "left", path), path + ".left");
        e->right = load_expr(field(obj, "right", path), path + ".right");
        return e;
    }
    if (kind == "unary") {
        auto e = std::make_unique<Unary>();
        read_pos(obj, *e);
        e->op = parse_unary_op(get_string(field(obj, "op", path), path + ".op"), path + ".op");
        e->operand = load_expr(field(obj, "operand", path), path + ".operand");
        if (e->op != UnaryOp::Neg && e->op != UnaryOp::Not &&
            e->operand->kind() != AstKind::VarRef) {
            throw SchemaError(path + ".operand",
                              "increment/decrement operand must be a varRef");
        }
        return e;
    }
    if (kind == "varRef") {
        auto e = std::make_unique<VarRef>();
        read_pos(obj, *e);
        e->name = get_string(field(obj, "name", path), path + ".name");
        return e;
    }
    if (kind == "intLit") {
        auto e = std::make_unique<IntLiteral>();
        read_pos(obj, *e);
        const json& v = field(obj, "value", path);
        if (!v.is_number_integer()) {
            throw SchemaError(path + ".value", "expected an integer");
        }
        e->value = v.get<long long>();
        return e;
    }
    if (kind == "boolLit") {
        auto e = std::make_unique<BoolLiteral>();
        read_pos(obj, *e);
        const json& v = field(obj, "value", path);
        if (!v.is_boolean()) {
            throw SchemaError(path + ".value", "expected a boolean");
        }
        e->value = v.get<bool>();
        return e;
    }
    if (kind == "call") {
        auto e = std::make_unique<Call>();
        read_pos(obj, *e);
        e->name = get_string(field(obj, "name", path), path + ".name");
        const json& args = field(obj, "args", path);
        if (!args.is_array()) {
            throw SchemaError(path + ".args", "expected an array");
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
            e->args.push_back(load_expr(args[i], path + ".args[" + std::to_string(i) + "]"));
        }
        return e;
    }
    throw SchemaError(path + ".kind", "unknown expression kind '" + kind + "'");
}

StmtPtr load_stmt(const json& obj, const std::string& path) {
    std::string kind = get_string(field(obj, "kind", path), path + ".kind");
    if (kind == "block") {
        auto s = std::make_unique<Block>();
        read_pos(obj, *s);
        const json& stmts = field(obj, "statements", path);
        if (!stmts.is_array()) {
            throw SchemaError(path + ".statements", "expected an array");
        }
        for (std::size_t i = 0; i < stmts.size(); ++i) {
            s->statements.push_back(
                    load_stmt(stmts[i], path + ".statements[" + std::to_string(i) + "]"));
        }
        return s;
    }
    if (kind == "localVar") {
        auto s = std::make_unique<LocalVarDecl>();
        read_pos(obj, *s);
        s->type = get_string(field(obj, "type", path), path + ".type");
        s->name = get_string(field(obj, "name", path), path + ".name");
        if (const json* init = optional_field(obj, "init")) {
            s->init = load_expr(*init, path + ".init");
        }
        return s;
    }
    if (kind == "exprStmt") {
        auto s = std::make_unique<ExprStmt>();
        read_pos(obj, *s);
        s->expr = load_expr(field(obj, "expr", path), path + ".expr");
        return s;
    }
    if (kind == "if") {
        auto s = std::make_unique<If>();
        read_pos(obj, *s);
        s->cond = load_expr(field(obj, "cond", path), path + ".cond");
        s->then_branch = load_stmt(field(obj, "then", path), path + ".then");
        if (const json* e = optional_field(obj, "else")) {
            s->else_branch = load_stmt(*e, path + ".else");
        }
        return s;
    }
    if (kind == "while") {
        auto s = std::make_unique<While>();
        read_pos(obj, *s);
        s->cond = load_expr(field(obj, "cond", path), path + ".cond");
        s->body = load_stmt(field(obj, "body", path), path + ".body");
        return s;
    }
    if (kind == "for") {
        auto s = std::make_unique<For>();
        read_pos(obj, *s);
        if (const json* init = optional_field(obj, "init")) {
            s->init = load_stmt(*init, path + ".init");
            if (s->init->kind() != AstKind::LocalVarDecl && s->init->kind() != AstKind::ExprStmt) {
                throw SchemaError(path + ".init", "for initializer must be localVar or exprStmt");
            }
        }
        if (const json* cond = optional_field(obj, "cond")) {
            s->cond = load_expr(*cond, path + ".cond");
        }
        if (const json* update = optional_field(obj, "update")) {
            s->update = load_expr(*update, path + ".update");
        }
        s->body = load_stmt(field(obj, "body", path), path + ".body");
        return s;
    }
    if (kind == "return") {
        auto s = std::make_unique<Return>();
        read_pos(obj, *s);
        if (const json* e = optional_field(obj, "expr")) {
            s->value = load_expr(*e, path + ".expr");
        }
        return s;
    }
    if (kind == "break") {
        auto s = std::make_unique<Break>();
        read_pos(obj, *s);
        if (const json* l = optional_field(obj, "label")) {
            s->label = get_string(*l, path + ".label");
        }
        return s;
    }
    if (kind == "continue") {
        auto s = std::make_unique<Continue>();
        read_pos(obj, *s);
        if (const json* l = optional_field(obj, "label")) {
            s->label = get_string(*l, path + ".label");
        }
        return s;
    }
    if (kind == "labeled") {
        auto s = std::make_unique<Labeled>();
        read_pos(obj, *s);
        s->label = get_string(field(obj, "label", path), path + ".label");
        s->stmt = load_stmt(field(obj, "stmt", path), path + ".stmt");
        return s;
    }
    if (kind == "empty") {
        auto s = std::make_unique<Empty>();
        read_pos(obj, *s);
        return s;
    }
    throw SchemaError(path + ".kind", "unknown statement kind '" + kind + "'");
}

// --- dumping -------------------------------------------------------------

json dump_expr(const Expression& e);
json dump_stmt(const Statement& s);

void write_pos(json& obj, const AstNode& node) {
    if (node.pos.line != 0) {
        obj["line"] = node.pos.line;
        obj["col"] = node.pos.column;
    }
}

json dump_expr(const Expression& e) {
    json obj;
    switch (e.kind()) {
        case AstKind::Assignment: {
            auto& x = static_cast<const Assignment&>(e);
            obj["kind"] = "assign";
            obj["target"] = x.target;
            obj["op"] = assign_op_text(x.op);
            obj["value"] = dump_expr(*x.value);
            break;
        }
        case AstKind::Binary: {
            auto& x = static_cast<const Binary&>(e);
            obj["kind"] = "binary";
            obj["op"] = binary_op_text(x.op);
            obj["left"] = dump_expr(*x.left);
            obj["right"] = dump_expr(*x.right);
            break;
        }
        case AstKind::Unary: {
            auto& x = static_cast<const Unary&>(e);
            obj["kind"] = "unary";
            std::string op = unary_op_token(x.op);
            if (x.op != UnaryOp::Neg && x.op != UnaryOp::Not) {
                op += unary_is_postfix(x.op) ? "post" : "pre";
            }
            obj["op"] = op;
            obj["operand"] = dump_expr(*x.operand);
            break;
        }
        case AstKind::VarRef:
            obj["kind"] = "varRef";
            obj["name"] = static_cast<const VarRef&>(e).name;
            break;
        case AstKind::IntLiteral:
            obj["kind"] = "intLit";
            obj["value"] = static_cast<const IntLiteral&>(e).value;
            break;
        case AstKind::BoolLiteral:
            obj["kind"] = "boolLit";
            obj["value"] = static_cast<const BoolLiteral&>(e).value;
            break;
        case AstKind::Call: {
            auto& x = static_cast<const Call&>(e);
            obj["kind"] = "call";
            obj["name"] = x.name;
            obj["args"] = json::array();
            for (const auto& arg : x.args) {
                obj["args"].push_back(dump_expr(*arg));
            }
            break;
        }
        default:
            break;
    }
    write_pos(obj, e);
    return obj;
}

json dump_stmt(const Statement& s) {
    json obj;
    switch (s.kind()) {
        case AstKind::Block: {
            obj["kind"] = "block";
            obj["statements"] = json::array();
            for (const auto& child : static_cast<const Block&>(s).statements) {
                obj["statements"].push_back(dump_stmt(*child));
            }
            break;
        }
        case AstKind::LocalVarDecl: {
            auto& x = static_cast<const LocalVarDecl&>(s);
            obj["kind"] = "localVar";
            obj["type"] = x.type;
            obj["name"] = x.name;
            if (x.init) {
                obj["init"] = dump_expr(*x.init);
            }
            break;
        }
        case AstKind::ExprStmt:
            obj["kind"] = "exprStmt";
            obj["expr"] = dump_expr(*static_cast<const ExprStmt&>(s).expr);
            break;
        case AstKind::If: {
            auto& x = static_cast<const If&>(s);
            obj["kind"] = "if";
            obj["cond"] = dump_expr(*x.cond);
            obj["then"] = dump_stmt(*x.then_branch);
            if (x.else_branch) {
                obj["else"] = dump_stmt(*x.else_branch);
            }
            break;
        }
        case AstKind::While: {
            auto& x = static_cast<const While&>(s);
            obj["kind"] = "while";
            obj["cond"] = dump_expr(*x.cond);
            obj["body"] = dump_stmt(*x.body);
            break;
        }
        case AstKind::For: {
            auto& x = static_cast<const For&>(s);
            obj["kind"] = "for";
            if (x.init) {
                obj["init"] = dump_stmt(*x.init);
            }
            if (x.cond) {
                obj["cond"] = dump_expr(*x.cond);
            }
            if (x.update) {
                obj["update"] = dump_expr(*x.update);
            }
            obj["body"] = dump_stmt(*x.body);
            break;
        }
        case AstKind::Return: {
            auto& x = static_cast<const Return&>(s);
            obj["kind"] = "return";
            if (x.value) {
                obj["expr"] = dump_expr(*x.value);
            }
            break;
        }
        case AstKind::Break: {
            auto& x = static_cast<const Break&>(s);
            obj["kind"] = "break";
            if (!x.label.empty()) {
                obj["label"] = x.label;
            }
            break;
        }
        case AstKind::Continue: {
            auto& x = static_cast<const Continue&>(s);
            obj["kind"] = "continue";
            if (!x.label.empty()) {
                obj["label"] = x.label;
            }
            break;
        }
        case AstKind::Labeled: {
            auto& x = static_cast<const Labeled&>(s);
            obj["kind"] = "labeled";
            obj["label"] = x.label;
            obj["stmt"] = dump_stmt(*x.stmt);
            break;
        }
        case AstKind::Empty:
            obj["kind"] = "empty";
            break;
        default:
            break;
    }
    write_pos(obj, s);
    return obj;
}

}  // namespace

std::unique_ptr<CompilationUnit> load_ast_json(std::string_view document) {
    json root = json::parse(document, nullptr, false);
    if (root.is_discarded()) {
        throw SchemaError("$", "document is not valid JSON");
    }
    auto unit = std::make_unique<CompilationUnit>();
    read_pos(root, *unit);
    const json& classes = field(root, "classes", "$");
    if (!classes.is_array()) {
        throw SchemaError("classes", "expected an array");
    }
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        std::string cpath = "classes[" + std::to_string(ci) + "]";
        const json& cobj = classes[ci];
        auto cls = std::make_unique<ClassDecl>();
        read_pos(cobj, *cls);
        cls->name = get_string(field(cobj, "name", cpath), cpath + ".name");
        const json& methods = field(cobj, "methods", cpath);
        if (!methods.is_array()) {
            throw SchemaError(cpath + ".methods", "expected an array");
        }
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            std::string mpath = cpath + ".methods[" + std::to_string(mi) + "]";
            const json& mobj = methods[mi];
            auto method = std::make_unique<MethodDecl>();
            read_pos(mobj, *method);
            method->name = get_string(field(mobj, "name", mpath), mpath + ".name");
            const json& params = field(mobj, "params", mpath);
            if (!params.is_array()) {
                throw SchemaError(mpath + ".params", "expected an array");
            }
            for (std::size_t pi = 0; pi < params.size(); ++pi) {
                std::string ppath = mpath + ".params[" + std::to_string(pi) + "]";
                MethodDecl::Param p;
                p.name = get_string(field(params[pi], "name", ppath), ppath + ".name");
                p.type = get_string(field(params[pi], "type", ppath), ppath + ".type");
                method->params.push_back(std::move(p));
            }
            StmtPtr body = load_stmt(field(mobj, "body", mpath), mpath + ".body");
            if (body->kind() != AstKind::Block) {
                throw SchemaError(mpath + ".body", "method body must be a block");
            }
            method->body.reset(static_cast<Block*>(body.release()));
            cls->methods.push_back(std::move(method));
        }
        unit->classes.push_back(std::move(cls));
    }
    return unit;
}

std::string dump_ast_json(const CompilationUnit& unit) {
    json root;
    root["classes"] = json::array();
    for (const auto& cls : unit.classes) {
        json cobj;
        cobj["name"] = cls->name;
        cobj["methods"] = json::array();
        for (const auto& method : cls->methods) {
            json mobj;
            mobj["name"] = method->name;
            mobj["params"] = json::array();
            for (const auto& p : method->params) {
                mobj["params"].push_back({{"name", p.name}, {"type", p.type}});
            }
            mobj["body"] = dump_stmt(*method->body);
            write_pos(mobj, *method);
            cobj["methods"].push_back(std::move(mobj));
        }
        write_pos(cobj, *cls);
        root["classes"].push_back(std::move(cobj));
    }
    write_pos(root, unit);
    return root.dump(2) + "\n";
}

}  // namespace flowgraph
