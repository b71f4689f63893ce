#include "colorlab/constructions.hpp"

#include <limits>
#include <string>

#include "colorlab/error.hpp"
#include "colorlab/io.hpp"

namespace colorlab {

namespace {

BigInt power(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

void check_size(const char* what, const BigInt& order, std::uint64_t cap)
{
    if (order > cap || order > std::numeric_limits<int>::max())
        throw SizeBudgetError(std::string(what) + " would have " + order.str() + " vertices, above the cap of " +
                                  std::to_string(cap),
                              order.str());
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InputError(message);
}

int int_power(int base, int exponent)
{
    int out = 1;
    for (int e = 0; e < exponent; ++e)
        out *= base;
    return out;
}

nlohmann::json one_based(const std::vector<Vertex>& vs)
{
    auto out = nlohmann::json::array();
    for (Vertex v : vs)
        out.push_back(v + 1);
    return out;
}

}  // namespace

BigInt bad_list_order(int t, int k)
{
    require(t >= 1 && k >= 1, "bad list needs t >= 1 and k >= 1");
    return BigInt(t) + power(BigInt(k), t);
}

BadList bad_list_for_bipartite(int t, int k, std::uint64_t vertex_cap)
{
    require(t >= 1 && k >= 1, "bad list needs t >= 1 and k >= 1");
    check_size("K_{t,k^t}", bad_list_order(t, k), vertex_cap);
    const int leaves = int_power(k, t);
    BadList out{complete_bipartite(t, leaves), ListAssignment(t + leaves), TokenAssignment(t + leaves)};
    for (int i = 0; i < t; ++i) {
        for (int c = 0; c < k; ++c)
            out.lists[i].push_back(i * k + c);
        out.g[i] = k;
    }
    for (int r = 0; r < leaves; ++r) {
        auto& list = out.lists[t + r];
        list.resize(t);
        int rest = r;
        for (int i = t - 1; i >= 0; --i) {
            list[i] = i * k + rest % k;
            rest /= k;
        }
        out.g[t + r] = t;
    }
    return out;
}

std::pair<int, int> GadgetLabeling::clique_index(Vertex v) const
{
    if (!in_U(v))
        throw InputError("vertex " + std::to_string(v + 1) + " is not in U");
    return {v / (t + 1), v % (t + 1)};
}

std::pair<int, int> GadgetLabeling::x_index(Vertex v) const
{
    if (!in_X(v))
        throw InputError("vertex " + std::to_string(v + 1) + " is not in X");
    const int r = v - static_cast<int>(U.size());
    return {r % t, r / t};
}

BigInt gadget_order(int t, int k)
{
    require(t >= 1 && k >= t, "gadget needs k >= t >= 1");
    return BigInt(t + 1) * (t + 1) * power(BigInt(k), t) + BigInt(t) * (t + 1);
}

Gadget gadget_H(int t, int k, std::uint64_t vertex_cap)
{
    require(t >= 1 && k >= t, "gadget needs k >= t >= 1");
    check_size("H(t,k)", gadget_order(t, k), vertex_cap);
    GadgetLabeling lab;
    lab.t = t;
    lab.k = k;
    lab.cliques = (t + 1) * int_power(k, t);
    const int n_u = lab.cliques * (t + 1);
    const int n = n_u + t * (t + 1);
    for (Vertex v = 0; v < n_u; ++v)
        lab.U.push_back(v);
    for (Vertex v = n_u; v < n; ++v)
        lab.X.push_back(v);
    lab.h.assign(n, t + 1);
    for (Vertex v : lab.X)
        lab.h[v] = k - t + 1;

    std::vector<Edge> edges;
    for (int l = 0; l < lab.cliques; ++l)
        for (int a = 0; a <= t; ++a)
            for (int b = a + 1; b <= t; ++b)
                edges.emplace_back(lab.u(l, a), lab.u(l, b));
    for (int j = 0; j <= t; ++j)
        for (int i = 0; i < t; ++i)
            for (int l = 0; l < lab.cliques; ++l)
                edges.emplace_back(lab.u(l, j), lab.x(i, j));
    return {Graph(n, edges), std::move(lab)};
}

std::vector<int> CompositeLabeling::tuple(int copy) const
{
    std::vector<int> out(coordinates);
    for (int j = coordinates - 1; j >= 0; --j) {
        out[j] = copy % k;
        copy /= k;
    }
    return out;
}

int CompositeLabeling::copy_of_tuple(std::span<const int> tuple) const
{
    if (static_cast<int>(tuple.size()) != coordinates)
        throw InputError("tuple has the wrong length");
    int copy = 0;
    for (int digit : tuple) {
        if (digit < 0 || digit >= k)
            throw InputError("tuple entry out of range");
        copy = copy * k + digit;
    }
    return copy;
}

BigInt composite_order(int t, int k)
{
    require(t >= 1 && k >= 2 * t, "composite graph needs k >= 2t >= 2");
    return power(BigInt(k), k - 2 * t) * gadget_order(t, k) + (k - 2 * t);
}

Composite graph_G(int t, int k, std::uint64_t vertex_cap)
{
    require(t >= 1 && k >= 2 * t, "composite graph needs k >= 2t >= 2");
    check_size("G(t,k)", composite_order(t, k), vertex_cap);
    Gadget h = gadget_H(t, k, vertex_cap);
    CompositeLabeling lab;
    lab.t = t;
    lab.k = k;
    lab.gadget = std::move(h.labeling);
    lab.coordinates = k - 2 * t;
    lab.copies = int_power(k, lab.coordinates);
    const int size = lab.gadget.order();
    const int n = lab.copies * size + lab.coordinates;

    std::vector<Edge> edges;
    for (int c = 0; c < lab.copies; ++c) {
        const Vertex off = lab.offset(c);
        for (const auto& [a, b] : h.graph.edges())
            edges.emplace_back(off + a, off + b);
        for (Vertex u : lab.gadget.U)
            lab.U_tilde.push_back(off + u);
    }
    for (int j = 0; j < lab.coordinates; ++j) {
        const Vertex y = lab.copies * size + j;
        lab.y.push_back(y);
        for (Vertex u : lab.U_tilde)
            edges.emplace_back(u, y);
    }
    return {Graph(n, edges), std::move(lab)};
}

BigInt paper_k(int t)
{
    if (t < 1)
        throw InputError("paper_k needs t >= 1");
    return power(BigInt(2), static_cast<unsigned>(8 * t * t * t));
}

bool greedy_feasibility(int t, const BigInt& k)
{
    if (t < 1 || k < t)
        throw InputError("greedy_feasibility needs k >= t >= 1");
    const unsigned e = static_cast<unsigned>(t + 1);
    BigInt lhs = power(power(BigInt(2), static_cast<unsigned>(t * (t + 1))) * (t + 1), e) * power(k, t);
    BigInt rhs = power(k - t + 1, e);
    return lhs < rhs;
}

nlohmann::json to_json(const GadgetLabeling& lab)
{
    nlohmann::json out;
    out["t"] = lab.t;
    out["k"] = lab.k;
    out["U"] = one_based(lab.U);
    out["X"] = one_based(lab.X);
    out["h"] = tokens_to_json(lab.h)["tokens"];
    nlohmann::json cliques = nlohmann::json::object();
    for (Vertex v : lab.U) {
        auto [l, j] = lab.clique_index(v);
        cliques[std::to_string(v + 1)] = {l + 1, j + 1};
    }
    out["clique_index"] = std::move(cliques);
    nlohmann::json xs = nlohmann::json::object();
    for (Vertex v : lab.X) {
        auto [i, j] = lab.x_index(v);
        xs[std::to_string(v + 1)] = {i + 1, j + 1};
    }
    out["x_index"] = std::move(xs);
    return out;
}

nlohmann::json to_json(const CompositeLabeling& lab)
{
    nlohmann::json out;
    out["t"] = lab.t;
    out["k"] = lab.k;
    auto copies = nlohmann::json::array();
    for (int c = 0; c < lab.copies; ++c) {
        auto tuple = nlohmann::json::array();
        for (int d : lab.tuple(c))
            tuple.push_back(d + 1);
        copies.push_back({{"tuple", std::move(tuple)}, {"first_vertex", lab.offset(c) + 1}});
    }
    out["copies"] = std::move(copies);
    out["y"] = one_based(lab.y);
    out["U_tilde"] = one_based(lab.U_tilde);
    out["gadget"] = to_json(lab.gadget);
    return out;
}

}  // namespace colorlab
