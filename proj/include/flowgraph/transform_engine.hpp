#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowgraph/ast.hpp"

namespace flowgraph {

class TransformationContext;
class TransformationRule;

// Rule outputs are arbitrary objects; the engine does not distinguish
// between model elements and helper objects.
using RuleOutput = std::shared_ptr<void>;

using Selector = std::function<std::vector<const AstNode*>(const AstNode&)>;
using Persistor = std::function<void(const RuleOutput& parent, const RuleOutput& child)>;

// A dependency to another rule: the selector picks the sub-inputs to
// transform, the optional persistor writes each child output into the
// parent's output.
struct Dependency {
    TransformationRule* target = nullptr;
    Selector selector;
    Persistor persistor;
};

class TransformationRule {
public:
    TransformationRule(std::string name, AstKind input_kind)
            : name_(std::move(name)), input_kind_(input_kind) {}

    TransformationRule(const TransformationRule&) = delete;
    TransformationRule& operator=(const TransformationRule&) = delete;
    virtual ~TransformationRule() = default;

    const std::string& name() const { return name_; }
    AstKind input_kind() const { return input_kind_; }
    TransformationRule* instantiates() const { return instantiates_; }

    // Marks this rule as instantiating for a hub rule: when the hub is
    // called with an input matching this rule's more specific kind, this
    // rule creates the output on the hub's behalf.
    void mark_instantiating_for(TransformationRule& hub);

    void require(TransformationRule& target, Selector selector, Persistor persistor = {});
    const std::vector<Dependency>& requirements() const { return requirements_; }

    virtual RuleOutput create_output(const AstNode& input, TransformationContext& context) = 0;
    virtual void transform(const AstNode& input, const RuleOutput& output,
                           TransformationContext& context);

private:
    std::string name_;
    AstKind input_kind_;
    TransformationRule* instantiates_ = nullptr;
    std::vector<Dependency> requirements_;
};

// One transformation pass. Every (rule, input) pair is transformed at
// most once; the memo doubles as the trace.
class TransformationContext {
public:
    TransformationContext() = default;
    TransformationContext(const TransformationContext&) = delete;
    TransformationContext& operator=(const TransformationContext&) = delete;

    void register_rule(TransformationRule& rule);
    bool is_registered(const TransformationRule& rule) const;
    const std::vector<TransformationRule*>& rules() const { return rules_; }

    // Returns the memoized output when the pair was already transformed;
    // otherwise resolves instantiation, creates the output, memoizes it,
    // evaluates the dependencies, and runs the transform bodies from the
    // most specific rule up to the called rule.
    RuleOutput call_rule(TransformationRule& rule, const AstNode& input);

    template <typename T>
    std::shared_ptr<T> call(TransformationRule& rule, const AstNode& input) {
        return std::static_pointer_cast<T>(call_rule(rule, input));
    }

    // Queries the trace without triggering a transformation.
    std::optional<RuleOutput> trace_lookup(const TransformationRule& rule,
                                           const AstNode& input) const;

    // The most specific registered rule whose instantiation chain reaches
    // hub and whose input kind matches the input; hub itself when none.
    TransformationRule& resolve_instantiation(TransformationRule& hub, const AstNode& input) const;

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<const TransformationRule*, const AstNode*>& k) const {
            std::size_t h1 = std::hash<const void*>{}(k.first);
            std::size_t h2 = std::hash<const void*>{}(k.second);
            return h1 ^ (h2 + 0x9e3779b97f4a7c15ull + (h1 << 6) + (h1 >> 2));
        }
    };

    using Key = std::pair<const TransformationRule*, const AstNode*>;

    std::vector<TransformationRule*> rules_;
    std::unordered_map<Key, RuleOutput, KeyHash> memo_;
};

// Convenience base: casts the erased input/output to the rule's types.
// OutputT must be the output base type shared by the rule's hub chain.
template <typename InputT, typename OutputT>
class TypedRule : public TransformationRule {
public:
    using TransformationRule::TransformationRule;

    RuleOutput create_output(const AstNode& input, TransformationContext& context) final {
        return std::static_pointer_cast<void>(create(static_cast<const InputT&>(input), context));
    }

    void transform(const AstNode& input, const RuleOutput& output,
                   TransformationContext& context) final {
        apply(static_cast<const InputT&>(input), *std::static_pointer_cast<OutputT>(output),
              context);
    }

    virtual std::shared_ptr<OutputT> create(const InputT& input, TransformationContext& context) = 0;
    virtual void apply(const InputT& input, OutputT& output, TransformationContext& context) {
        (void)input;
        (void)output;
        (void)context;
    }

protected:
    // Registers a dependency with a typed selector and persistor.
    template <typename ChildOutT>
    void require_each(TransformationRule& target,
                      std::function<std::vector<const AstNode*>(const InputT&)> selector,
                      std::function<void(OutputT&, ChildOutT&)> persistor = {}) {
        Persistor erased;
        if (persistor) {
            erased = [persistor](const RuleOutput& parent, const RuleOutput& child) {
                persistor(*std::static_pointer_cast<OutputT>(parent),
                          *std::static_pointer_cast<ChildOutT>(child));
            };
        }
        require(
                target,
                [selector](const AstNode& input) {
                    return selector(static_cast<const InputT&>(input));
                },
                std::move(erased));
    }
};

}  // namespace flowgraph
