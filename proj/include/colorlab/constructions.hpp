#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "colorlab/graph.hpp"

namespace colorlab {

using BigInt = boost::multiprecision::cpp_int;

/// Constructions above this many vertices are refused with SizeBudgetError.
inline constexpr std::uint64_t default_vertex_cap = 1'000'000;

/// K_{t,k^t}: vertices 0..t-1 form the small side and carry disjoint
/// k-lists; leaf t+r carries the r-th element (first coordinate most
/// significant) of the product of those lists. g is k on the small side and
/// t on the leaves.
struct BadList {
    Graph graph;
    ListAssignment lists;
    TokenAssignment g;
};

BigInt bad_list_order(int t, int k);
BadList bad_list_for_bipartite(int t, int k, std::uint64_t vertex_cap = default_vertex_cap);

/// Vertex layout of the gadget: clique l (0-based) occupies
/// u(l, 0..t), then X follows ordered by j and then i.
struct GadgetLabeling {
    int t = 0;
    int k = 0;
    /// (t+1) k^t
    int cliques = 0;
    std::vector<Vertex> U;
    std::vector<Vertex> X;
    TokenAssignment h;

    int order() const { return static_cast<int>(U.size() + X.size()); }
    Vertex u(int l, int j) const { return l * (t + 1) + j; }
    Vertex x(int i, int j) const { return static_cast<Vertex>(U.size()) + j * t + i; }
    bool in_U(Vertex v) const { return v >= 0 && v < static_cast<Vertex>(U.size()); }
    bool in_X(Vertex v) const { return v >= static_cast<Vertex>(U.size()) && v < order(); }
    /// (l, j) of a U vertex.
    std::pair<int, int> clique_index(Vertex v) const;
    /// (i, j) of an X vertex.
    std::pair<int, int> x_index(Vertex v) const;
};

struct Gadget {
    Graph graph;
    GadgetLabeling labeling;
};

BigInt gadget_order(int t, int k);
/// Requires k >= t >= 1.
Gadget gadget_H(int t, int k, std::uint64_t vertex_cap = default_vertex_cap);

/// Copies of the gadget laid out back to back (copy c starts at c * |H|),
/// followed by y_1..y_{k-2t}. Copy c is indexed by the base-k digits of c
/// (first coordinate most significant), each digit in 0..k-1.
struct CompositeLabeling {
    int t = 0;
    int k = 0;
    GadgetLabeling gadget;
    int copies = 0;
    /// k - 2t
    int coordinates = 0;
    std::vector<Vertex> y;
    std::vector<Vertex> U_tilde;

    Vertex offset(int copy) const { return copy * gadget.order(); }
    std::vector<int> tuple(int copy) const;
    int copy_of_tuple(std::span<const int> tuple) const;
};

struct Composite {
    Graph graph;
    CompositeLabeling labeling;
};

BigInt composite_order(int t, int k);
/// Requires k >= 2t >= 2.
Composite graph_G(int t, int k, std::uint64_t vertex_cap = default_vertex_cap);

/// 2^(8 t^3)
BigInt paper_k(int t);

/// (2^(t(t+1)) (t+1))^(t+1) k^t < (k-t+1)^(t+1)
bool greedy_feasibility(int t, const BigInt& k);

/// Labelings use 1-based vertices and indices.
nlohmann::json to_json(const GadgetLabeling& lab);
nlohmann::json to_json(const CompositeLabeling& lab);

}  // namespace colorlab
