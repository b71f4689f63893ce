#pragma once

#include <utility>
#include <vector>

#include "colorlab/graph.hpp"

namespace helpers {

/// Graph from 1-based edge pairs, as written in the file format.
inline colorlab::Graph graph1(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<colorlab::Edge> zero;
    for (auto [a, b] : edges)
        zero.emplace_back(a - 1, b - 1);
    return colorlab::Graph(n, zero);
}

inline colorlab::TokenAssignment constant(const colorlab::Graph& g, int k)
{
    return colorlab::TokenAssignment(g.order(), k);
}

}  // namespace helpers
