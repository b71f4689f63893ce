#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace colorlab {

/// Vertices are dense indices 0..n-1. Text and JSON formats use 1..n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Per-vertex token counts (the f, g, h of the game and cover definitions).
using TokenAssignment = std::vector<int>;

/// Abstract color identifiers; lists may overlap between vertices.
using Color = int;
using ListAssignment = std::vector<std::vector<Color>>;

/// Finite simple undirected graph with sorted adjacency lists.
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on an out-of-range endpoint or a self-loop.
    /// Duplicate edges (in either orientation) are collapsed.
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Adjacency as bitmasks; only valid for order() <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    /// Subgraph induced by `vertices`, relabeled in the given order.
    Graph induced(std::span<const Vertex> vertices) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Parts {0..a-1} and {a..a+b-1}; both sizes must be positive.
Graph complete_bipartite(int a, int b);

/// Least d such that every subgraph has a vertex of degree <= d, by repeated
/// removal of a minimum-degree vertex (ties to the smallest id).
int degeneracy(const Graph& g);

bool is_connected(const Graph& g);

/// Spanning forest grown breadth-first from the smallest unvisited vertex,
/// visiting neighbors in increasing order. Restricted to `active` when given.
std::vector<Edge> spanning_forest(const Graph& g, const std::vector<bool>* active = nullptr);

}  // namespace colorlab
