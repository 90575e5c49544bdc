#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hasse/graph.hpp"

namespace hasse {

// Lexicographically minimal rotation/reflection of a cycle's vertex
// sequence. Cycles compare and dedupe through this form.
std::vector<int> canonical_cycle(std::vector<int> cycle);

// Enumerates every simple cycle of length 3..max_len exactly once, in
// canonical form, via DFS rooted at each cycle's minimum vertex (direction
// fixed by second < last). `sink` receives each cycle; returns the number of
// DFS expansions spent. Throws BudgetExceeded (carrying the partial cycle
// count) when expansions exceed max_nodes.
std::uint64_t for_each_cycle(const Graph& g, int max_len, std::uint64_t max_nodes,
                             const std::function<void(const std::vector<int>&)>& sink);

}  // namespace hasse
