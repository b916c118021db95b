#pragma once

#include <cstdint>
#include <optional>

#include "mapkit/graph.hpp"
#include "mapkit/tree_decomposition.hpp"

namespace mapkit {

// Greedy elimination: min-degree, min-fill tie-break, seeded tie-shuffle.
TreeDecomposition heuristic_decompose(const Graph& g, std::uint64_t seed);

// Exhaustive elimination-order search memoized on vertex subsets. Returns
// nullopt when the treewidth exceeds width_budget. Guarded to |V| <= 25.
std::optional<TreeDecomposition> exact_decompose_small(const Graph& g, int width_budget);

// Nice-form conversion of the same width; re-roots at a fresh empty bag.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

}  // namespace mapkit
