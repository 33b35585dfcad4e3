#include "flowgraph/synth.hpp"

#include <random>
#include <string>
#include <vector>

namespace flowgraph {

namespace {

ExprPtr make_var(const std::string& name) {
    auto e = std::make_unique<VarRef>();
    e->name = name;
    return e;
}

ExprPtr make_int(long long value) {
    auto e = std::make_unique<IntLiteral>();
    e->value = value;
    return e;
}

ExprPtr make_bool(bool value) {
    auto e = std::make_unique<BoolLiteral>();
    e->value = value;
    return e;
}

ExprPtr make_binary(ExprPtr left, BinaryOp op, ExprPtr right) {
    auto e = std::make_unique<Binary>();
    e->left = std::move(left);
    e->op = op;
    e->right = std::move(right);
    return e;
}

ExprPtr make_assign(const std::string& target, AssignOp op, ExprPtr value) {
    auto e = std::make_unique<Assignment>();
    e->target = target;
    e->op = op;
    e->value = std::move(value);
    return e;
}

StmtPtr make_expr_stmt(ExprPtr expr) {
    auto s = std::make_unique<ExprStmt>();
    s->expr = std::move(expr);
    return s;
}

std::unique_ptr<LocalVarDecl> make_decl(const std::string& name, ExprPtr init) {
    auto s = std::make_unique<LocalVarDecl>();
    s->type = "int";
    s->name = name;
    s->init = std::move(init);
    return s;
}

// --- random method generator ----------------------------------------------

class RandomMethodBuilder {
public:
    RandomMethodBuilder(std::uint32_t seed, int max_statements, int max_vars)
            : rng_(seed), budget_(1 + static_cast<int>(pick(static_cast<std::uint32_t>(
                                   max_statements)))), max_vars_(max_vars) {}

    std::unique_ptr<MethodDecl> build(std::uint32_t seed) {
        auto method = std::make_unique<MethodDecl>();
        method->name = "m" + std::to_string(seed);

        int params = static_cast<int>(pick(static_cast<std::uint32_t>(
                std::min(max_vars_, 2) + 1)));
        for (int i = 0; i < params; ++i) {
            std::string name = fresh_var();
            method->params.push_back(MethodDecl::Param{name, "int"});
            declared_.push_back(name);
        }

        method->body = gen_block(0, 1);
        return method;
    }

private:
    std::uint32_t pick(std::uint32_t n) { return n == 0 ? 0 : rng_() % n; }

    bool chance(std::uint32_t percent) { return pick(100) < percent; }

    std::string fresh_var() { return "v" + std::to_string(var_counter_++); }

    bool can_declare() const {
        return static_cast<int>(declared_.size()) < max_vars_;
    }

    const std::string& random_var() { return declared_[pick(static_cast<std::uint32_t>(declared_.size()))]; }

    // integer-valued expression over declared variables
    ExprPtr gen_arith(int depth) {
        if (depth > 2 || declared_.empty() || chance(35)) {
            if (!declared_.empty() && chance(55)) {
                return make_var(random_var());
            }
            return make_int(static_cast<long long>(pick(10)));
        }
        switch (pick(6)) {
            case 0:
                return make_binary(gen_arith(depth + 1), BinaryOp::Add, gen_arith(depth + 1));
            case 1:
                return make_binary(gen_arith(depth + 1), BinaryOp::Sub, gen_arith(depth + 1));
            case 2:
                return make_binary(gen_arith(depth + 1), BinaryOp::Mul, gen_arith(depth + 1));
            case 3: {
                auto e = std::make_unique<Unary>();
                e->op = UnaryOp::Neg;
                e->operand = gen_arith(depth + 1);
                return e;
            }
            case 4: {
                auto call = std::make_unique<Call>();
                call->name = "f" + std::to_string(pick(3));
                int args = static_cast<int>(pick(3));
                for (int i = 0; i < args; ++i) {
                    call->args.push_back(gen_arith(depth + 1));
                }
                return call;
            }
            default:
                return make_binary(gen_arith(depth + 1), BinaryOp::Add, gen_arith(depth + 1));
        }
    }

    ExprPtr gen_cond(int depth) {
        if (depth > 1 || chance(15)) {
            if (chance(20)) {
                return make_bool(pick(2) == 1);
            }
            BinaryOp op;
            switch (pick(6)) {
                case 0: op = BinaryOp::Lt; break;
                case 1: op = BinaryOp::Gt; break;
                case 2: op = BinaryOp::Le; break;
                case 3: op = BinaryOp::Ge; break;
                case 4: op = BinaryOp::Eq; break;
                default: op = BinaryOp::Ne; break;
            }
            return make_binary(gen_arith(0), op, gen_arith(0));
        }
        switch (pick(3)) {
            case 0:
                return make_binary(gen_cond(depth + 1), BinaryOp::And, gen_cond(depth + 1));
            case 1:
                return make_binary(gen_cond(depth + 1), BinaryOp::Or, gen_cond(depth + 1));
            default: {
                auto e = std::make_unique<Unary>();
                e->op = UnaryOp::Not;
                e->operand = gen_cond(depth + 1);
                return e;
            }
        }
    }

    std::unique_ptr<Block> gen_block(int depth, int min_statements) {
        auto block = std::make_unique<Block>();
        int emitted = 0;
        while ((budget_ > 0 && !stop_) || emitted < min_statements) {
            block->statements.push_back(gen_statement(depth));
            ++emitted;
            if (emitted >= min_statements && (budget_ <= 0 || stop_)) {
                break;
            }
            if (depth > 0 && emitted >= min_statements && chance(35)) {
                break;  // leave some budget to the enclosing block
            }
        }
        stop_ = false;
        return block;
    }

    StmtPtr gen_statement(int depth) {
        --budget_;
        // nested constructs force at least one inner statement, so they
        // only fire while budget remains for it
        bool allow_nesting = depth < 4 && budget_ > 0;
        std::uint32_t roll = pick(100);

        if (declared_.empty() || (can_declare() && roll < 18)) {
            if (!can_declare()) {
                return make_expr_stmt(gen_arith(0));
            }
            std::string name = fresh_var();
            auto decl = make_decl(name, chance(85) ? gen_arith(0) : nullptr);
            declared_.push_back(name);
            return decl;
        }
        if (roll < 40) {
            AssignOp op = AssignOp::Assign;
            if (chance(25)) {
                switch (pick(5)) {
                    case 0: op = AssignOp::AddAssign; break;
                    case 1: op = AssignOp::SubAssign; break;
                    case 2: op = AssignOp::MulAssign; break;
                    case 3: op = AssignOp::DivAssign; break;
                    default: op = AssignOp::ModAssign; break;
                }
            }
            return make_expr_stmt(make_assign(random_var(), op, gen_arith(0)));
        }
        if (roll < 48) {
            auto e = std::make_unique<Unary>();
            switch (pick(4)) {
                case 0: e->op = UnaryOp::PostInc; break;
                case 1: e->op = UnaryOp::PostDec; break;
                case 2: e->op = UnaryOp::PreInc; break;
                default: e->op = UnaryOp::PreDec; break;
            }
            e->operand = make_var(random_var());
            return make_expr_stmt(std::move(e));
        }
        if (roll < 60 && allow_nesting && budget_ > 0) {
            auto s = std::make_unique<If>();
            s->cond = gen_cond(0);
            s->then_branch = gen_block(depth + 1, 1);
            if (budget_ > 0 && chance(45)) {
                s->else_branch = gen_block(depth + 1, 1);
            }
            return s;
        }
        if (roll < 70 && allow_nesting && budget_ > 0) {
            return gen_loop(depth, chance(25));
        }
        if (roll < 78 && loop_depth_ > 0) {
            return gen_jump();
        }
        if (roll < 84) {
            auto s = std::make_unique<Return>();
            if (chance(70)) {
                s->value = gen_arith(0);
            }
            // statements after a return are dead but still legal
            if (chance(80)) {
                stop_ = true;
            }
            return s;
        }
        if (roll < 88) {
            return std::make_unique<Empty>();
        }
        if (roll < 92 && allow_nesting && budget_ > 0) {
            return gen_block(depth + 1, 1);
        }
        return make_expr_stmt(make_assign(random_var(), AssignOp::Assign, gen_arith(0)));
    }

    StmtPtr gen_loop(int depth, bool labeled) {
        std::string label;
        if (labeled) {
            label = "L" + std::to_string(label_counter_++);
            labels_.push_back(label);
        }
        ++loop_depth_;

        StmtPtr loop;
        if (chance(55)) {
            auto s = std::make_unique<While>();
            s->cond = gen_cond(0);
            s->body = gen_block(depth + 1, 1);
            loop = std::move(s);
        } else {
            auto s = std::make_unique<For>();
            if (chance(70) && budget_ > 0) {
                --budget_;  // the initializer is a statement of its own
                if (can_declare() && chance(50)) {
                    std::string name = fresh_var();
                    auto decl = make_decl(name, gen_arith(0));
                    declared_.push_back(name);
                    s->init = std::move(decl);
                } else {
                    s->init = make_expr_stmt(
                            make_assign(random_var(), AssignOp::Assign, gen_arith(0)));
                }
            }
            if (chance(80)) {
                s->cond = gen_cond(0);
            }
            if (chance(75)) {
                s->update = make_assign(random_var(), AssignOp::Assign, gen_arith(0));
            }
            s->body = gen_block(depth + 1, 1);
            loop = std::move(s);
        }

        --loop_depth_;
        if (labeled) {
            labels_.pop_back();
            auto s = std::make_unique<Labeled>();
            s->label = label;
            s->stmt = std::move(loop);
            return s;
        }
        return loop;
    }

    StmtPtr gen_jump() {
        std::string label;
        if (!labels_.empty() && chance(40)) {
            label = labels_[pick(static_cast<std::uint32_t>(labels_.size()))];
        }
        if (chance(50)) {
            auto s = std::make_unique<Break>();
            s->label = label;
            return s;
        }
        auto s = std::make_unique<Continue>();
        s->label = label;
        return s;
    }

    std::mt19937 rng_;
    int budget_;
    int max_vars_;
    int var_counter_ = 0;
    int label_counter_ = 0;
    int loop_depth_ = 0;
    bool stop_ = false;
    std::vector<std::string> declared_;
    std::vector<std::string> labels_;
};

// --- bench profiles ---------------------------------------------------------

constexpr int kBenchVars = 8;

void emit_straight(Block& block, int& remaining, int& counter) {
    while (remaining > 0) {
        int i = counter++;
        std::string target = "v" + std::to_string(i % kBenchVars);
        std::string source = "v" + std::to_string((i + 1) % kBenchVars);
        block.statements.push_back(make_expr_stmt(make_assign(
                target, AssignOp::Assign,
                make_binary(make_var(source), BinaryOp::Add, make_int(i % 17)))));
        --remaining;
    }
}

void emit_nest(Block& block, int& remaining, int depth, int& loop_counter) {
    if (remaining <= 0) {
        return;
    }
    if (depth >= 6 || remaining < 4) {
        int counter = loop_counter * 31;
        emit_straight(block, remaining, counter);
        return;
    }
    // i<k> = 0; while (i<k> < 3) { i<k> = i<k> + 1; ... }
    std::string ivar = "i" + std::to_string(loop_counter++);
    block.statements.push_back(make_decl(ivar, make_int(0)));
    auto loop = std::make_unique<While>();
    loop->cond = make_binary(make_var(ivar), BinaryOp::Lt, make_int(3));
    auto body = std::make_unique<Block>();
    body->statements.push_back(
            make_expr_stmt(make_assign(ivar, AssignOp::Assign,
                                       make_binary(make_var(ivar), BinaryOp::Add, make_int(1)))));
    remaining -= 3;
    emit_nest(*body, remaining, depth + 1, loop_counter);
    loop->body = std::move(body);
    block.statements.push_back(std::move(loop));
}

void emit_branchy(Block& block, int& remaining, int depth, int& counter) {
    if (remaining <= 0) {
        return;
    }
    if (depth >= 14 || remaining < 3) {
        emit_straight(block, remaining, counter);
        return;
    }
    auto branch = std::make_unique<If>();
    branch->cond = make_binary(make_var("v" + std::to_string(counter % kBenchVars)), BinaryOp::Lt,
                               make_int(counter % 23));
    ++counter;
    --remaining;
    int half = remaining / 2;
    int rest = remaining - half;
    auto then_block = std::make_unique<Block>();
    emit_branchy(*then_block, half, depth + 1, counter);
    auto else_block = std::make_unique<Block>();
    emit_branchy(*else_block, rest, depth + 1, counter);
    branch->then_branch = std::move(then_block);
    branch->else_branch = std::move(else_block);
    block.statements.push_back(std::move(branch));
    remaining = 0;
}

}  // namespace

const char* bench_profile_name(BenchProfile p) {
    switch (p) {
        case BenchProfile::Straight: return "straight";
        case BenchProfile::Nested: return "nested";
        case BenchProfile::Branchy: return "branchy";
    }
    return "?";
}

std::unique_ptr<MethodDecl> generate_random_method(std::uint32_t seed, int max_statements,
                                                   int max_vars) {
    return RandomMethodBuilder(seed, max_statements, max_vars).build(seed);
}

std::unique_ptr<MethodDecl> generate_bench_method(BenchProfile profile, int statements) {
    auto method = std::make_unique<MethodDecl>();
    method->name = std::string("bench_") + bench_profile_name(profile);
    method->body = std::make_unique<Block>();

    if (statements <= 0) {
        return method;
    }

    int remaining = statements;
    // shared variable pool, declared up front
    for (int i = 0; i < kBenchVars && remaining > 0; ++i) {
        method->body->statements.push_back(make_decl("v" + std::to_string(i), make_int(i)));
        --remaining;
    }

    int counter = 0;
    switch (profile) {
        case BenchProfile::Straight:
            emit_straight(*method->body, remaining, counter);
            break;
        case BenchProfile::Nested:
            while (remaining > 0) {
                int chunk = std::min(remaining, 24);
                remaining -= chunk;
                emit_nest(*method->body, chunk, 0, counter);
            }
            break;
        case BenchProfile::Branchy:
            emit_branchy(*method->body, remaining, 0, counter);
            break;
    }

    if (remaining <= 0 && statements > kBenchVars) {
        auto ret = std::make_unique<Return>();
        ret->value = make_var("v0");
        method->body->statements.push_back(std::move(ret));
    }
    return method;
}

}  // namespace flowgraph
