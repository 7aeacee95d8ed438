#pragma once

#include <vector>

namespace rankagg::detail {

// Iterative Tarjan. Components are emitted in reverse topological order of
// the condensation (every sink component appears before its predecessors).
std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::vector<int>>& adj);

}  // namespace rankagg::detail
