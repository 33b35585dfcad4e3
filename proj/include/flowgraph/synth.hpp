#pragma once

#include <cstdint>
#include <memory>

#include "flowgraph/ast.hpp"

namespace flowgraph {

// Deterministic random method generator for property suites. All
// variables are declared before use, loops always contain a body
// statement, and jumps only appear inside (matching labeled) loops.
// max_statements bounds the number of non-block statements.
std::unique_ptr<MethodDecl> generate_random_method(std::uint32_t seed, int max_statements,
                                                   int max_vars);

enum class BenchProfile : std::uint8_t { Straight, Nested, Branchy };

const char* bench_profile_name(BenchProfile p);

// Synthetic methods of a requested statement count for the timing
// harness: straight-line assignment chains, bounded-depth loop nests, or
// if/else trees.
std::unique_ptr<MethodDecl> generate_bench_method(BenchProfile profile, int statements);

}  // namespace flowgraph
