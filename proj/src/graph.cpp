#include "colorlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "colorlab/error.hpp"

namespace colorlab {

Graph::Graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw InputError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u + 1) + " " +
                             std::to_string(v + 1));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u + 1));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const
{
    if (order() > 64)
        throw Error("adjacency masks need at most 64 vertices");
    std::vector<std::uint64_t> masks(adj_.size(), 0);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return masks;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> position(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbors(vertices[i])) {
            int j = position[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                sub.emplace_back(static_cast<int>(i), j);
        }
    return Graph(static_cast<int>(vertices.size()), sub);
}

Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        e.emplace_back(u, (u + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u)
        e.emplace_back(u, u + 1);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw InputError("complete bipartite graph needs two nonempty parts");
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

int degeneracy(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    if (n == 0)
        return 0;
    std::vector<int> degree(n);
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
        max_degree = std::max(max_degree, static_cast<std::size_t>(g.degree(v)));
    }
    // Ordered buckets give the smallest-id tie break.
    std::vector<std::set<Vertex>> bucket(max_degree + 1);
    for (Vertex v = 0; v < g.order(); ++v)
        bucket[static_cast<std::size_t>(degree[static_cast<std::size_t>(v)])].insert(v);
    std::vector<bool> removed(n, false);
    std::size_t d = 0;
    int result = 0;
    for (std::size_t step = 0; step < n; ++step) {
        d = d == 0 ? 0 : d - 1;
        while (bucket[d].empty())
            ++d;
        Vertex v = *bucket[d].begin();
        bucket[d].erase(bucket[d].begin());
        removed[static_cast<std::size_t>(v)] = true;
        result = std::max(result, static_cast<int>(d));
        for (Vertex w : g.neighbors(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (removed[wi])
                continue;
            auto dw = static_cast<std::size_t>(degree[wi]);
            bucket[dw].erase(w);
            --degree[wi];
            bucket[dw - 1].insert(w);
        }
    }
    return result;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    return spanning_forest(g).size() + 1 == static_cast<std::size_t>(g.order());
}

std::vector<Edge> spanning_forest(const Graph& g, const std::vector<bool>* active)
{
    const auto n = static_cast<std::size_t>(g.order());
    auto is_active = [&](Vertex v) { return active == nullptr || (*active)[static_cast<std::size_t>(v)]; };
    std::vector<bool> seen(n, false);
    std::vector<Edge> tree;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[static_cast<std::size_t>(root)] || !is_active(root))
            continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u)) {
                if (seen[static_cast<std::size_t>(w)] || !is_active(w))
                    continue;
                seen[static_cast<std::size_t>(w)] = true;
                tree.emplace_back(std::min(u, w), std::max(u, w));
                queue.push(w);
            }
        }
    }
    return tree;
}

}  // namespace colorlab
