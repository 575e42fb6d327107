#pragma once

// Exhaustive graph-automorphism enumeration by equitable partition refinement
// plus backtracking.  This is an independent oracle: it never assumes
// subspace structure, acting on the adjacency bitset alone.  The initial
// partition uses vertex degrees (trivially automorphism-invariant); it does
// NOT assume that automorphisms preserve subspace dimension — that is a
// consequence checked elsewhere, via degrees_separate_dimensions.

#include <cstdint>
#include <functional>
#include <vector>

#include "subsum/permutation.hpp"
#include "subsum/sumgraph.hpp"

namespace subsum {

inline constexpr std::uint64_t kDefaultNodeLimit = 10000000;

// Instance fact making degree pruning equivalent to dimension pruning: every
// vertex of one dimension has one shared degree, and distinct dimensions get
// distinct degrees.
bool degrees_separate_dimensions(const SumGraph& G);

// Calls visit exactly once per automorphism with its 0-based image vector,
// in search order (not sorted).  Throws search_limit_exceeded when more than
// node_limit assignment attempts were made.
void for_each_automorphism(const SumGraph& G, std::uint64_t node_limit,
                           const std::function<void(const std::vector<std::size_t>&)>& visit);

// All automorphisms, sorted by image tuple.
std::vector<VertexPermutation> enumerate_automorphisms(const SumGraph& G,
                                                       std::uint64_t node_limit = kDefaultNodeLimit);

// Streaming count without storing the permutations.
std::uint64_t count_automorphisms(const SumGraph& G, std::uint64_t node_limit = kDefaultNodeLimit);

}  // namespace subsum
