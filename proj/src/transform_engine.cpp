#include "flowgraph/transform_engine.hpp"

#include <algorithm>

#include "flowgraph/errors.hpp"

namespace flowgraph {

void TransformationRule::transform(const AstNode& input, const RuleOutput& output,
                                   TransformationContext& context) {
    (void)input;
    (void)output;
    (void)context;
}

void TransformationRule::mark_instantiating_for(TransformationRule& hub) {
    if (!ast_kind_matches(hub.input_kind(), input_kind_)) {
        throw InstantiationConflict("rule '" + name_ + "' cannot instantiate '" + hub.name() +
                                    "': input kind " + ast_kind_name(input_kind_) +
                                    " is not a " + ast_kind_name(hub.input_kind()));
    }
    for (TransformationRule* r = &hub; r != nullptr; r = r->instantiates()) {
        if (r == this) {
            throw InstantiationConflict("instantiation cycle through rule '" + name_ + "'");
        }
    }
    instantiates_ = &hub;
}

void TransformationRule::require(TransformationRule& target, Selector selector,
                                 Persistor persistor) {
    requirements_.push_back(Dependency{&target, std::move(selector), std::move(persistor)});
}

void TransformationContext::register_rule(TransformationRule& rule) {
    if (!is_registered(rule)) {
        rules_.push_back(&rule);
    }
}

bool TransformationContext::is_registered(const TransformationRule& rule) const {
    return std::find(rules_.begin(), rules_.end(), &rule) != rules_.end();
}

namespace {

// length of the instantiation chain from rule up to hub, or -1
int chain_length(const TransformationRule& rule, const TransformationRule& hub) {
    int length = 0;
    for (const TransformationRule* r = &rule; r != nullptr; r = r->instantiates()) {
        if (r == &hub) {
            return length;
        }
        ++length;
    }
    return -1;
}

}  // namespace

TransformationRule& TransformationContext::resolve_instantiation(TransformationRule& hub,
                                                                 const AstNode& input) const {
    TransformationRule* best = nullptr;
    int best_depth = -1;
    int best_chain = -1;
    bool tie = false;

    for (TransformationRule* rule : rules_) {
        if (rule == &hub || !ast_kind_matches(rule->input_kind(), input.kind())) {
            continue;
        }
        int chain = chain_length(*rule, hub);
        if (chain <= 0) {
            continue;
        }
        int depth = ast_kind_depth(rule->input_kind());
        if (depth > best_depth || (depth == best_depth && chain > best_chain)) {
            best = rule;
            best_depth = depth;
            best_chain = chain;
            tie = false;
        } else if (depth == best_depth && chain == best_chain) {
            tie = true;
        }
    }

    if (tie) {
        throw InstantiationConflict("two rules instantiate '" + hub.name() +
                                    "' for input kind " + ast_kind_name(input.kind()));
    }
    return best != nullptr ? *best : hub;
}

RuleOutput TransformationContext::call_rule(TransformationRule& rule, const AstNode& input) {
    if (!is_registered(rule)) {
        throw RuleNotRegistered(rule.name());
    }
    if (!ast_kind_matches(rule.input_kind(), input.kind())) {
        throw Error("rule '" + rule.name() + "' expects " + ast_kind_name(rule.input_kind()) +
                    " but was called with " + ast_kind_name(input.kind()));
    }

    Key key{&rule, &input};
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }

    TransformationRule& actual = resolve_instantiation(rule, input);

    // the pair may already have been transformed through the specific rule
    Key actual_key{&actual, &input};
    if (auto it = memo_.find(actual_key); it != memo_.end()) {
        memo_.emplace(key, it->second);
        return it->second;
    }

    RuleOutput output = actual.create_output(input, *this);

    // memoize before dependencies so cyclic requirements terminate
    memo_.emplace(key, output);
    if (&actual != &rule) {
        memo_.emplace(actual_key, output);
    }

    // the chain from the instantiating rule up to the called hub
    std::vector<TransformationRule*> chain;
    for (TransformationRule* r = &actual;; r = r->instantiates()) {
        chain.push_back(r);
        if (r == &rule) {
            break;
        }
    }

    for (TransformationRule* r : chain) {
        for (const Dependency& dep : r->requirements()) {
            for (const AstNode* node : dep.selector(input)) {
                RuleOutput child = call_rule(*dep.target, *node);
                if (dep.persistor) {
                    dep.persistor(output, child);
                }
            }
        }
    }
    for (TransformationRule* r : chain) {
        r->transform(input, output, *this);
    }
    return output;
}

std::optional<RuleOutput> TransformationContext::trace_lookup(const TransformationRule& rule,
                                                              const AstNode& input) const {
    auto it = memo_.find(Key{&rule, &input});
    if (it == memo_.end()) {
        return std::nullopt;
    }
    return it->second;
}

}  // namespace flowgraph
