#include "colorlab/greedy.hpp"

#include <algorithm>
#include <numeric>

namespace colorlab {

namespace {

void check_gadget_cover(const Cover& h, const Gadget& gadget)
{
    if (!(h.base == gadget.graph))
        throw InputError("cover is not over the gadget graph");
    auto violations = validate_cover(h);
    if (!violations.empty())
        throw InputError("invalid cover: " + violations.front().message);
    for (Vertex v = 0; v < gadget.graph.order(); ++v)
        if (static_cast<int>(h.fibers[v].size()) < gadget.labeling.h[v])
            throw InputError("fiber size: vertex " + std::to_string(v + 1) + " has " +
                             std::to_string(h.fibers[v].size()) + " colors, needs " +
                             std::to_string(gadget.labeling.h[v]));
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// |s|^(t+1) < k^(t(t+1-q))
bool within_bound(std::size_t size, int q, int t, const BigInt& k)
{
    using boost::multiprecision::pow;
    return pow(BigInt(size), static_cast<unsigned>(t + 1)) < pow(k, static_cast<unsigned>(t * (t + 1 - q)));
}

struct SubsetSearch {
    const std::vector<std::vector<int>>& sets;
    int t;
    const BigInt& k;
    std::vector<int> picked;

    /// Looks for a subset (indices into `sets`) extending `picked` whose
    /// intersection with the candidate set breaks the bound.
    bool find(const std::vector<int>& current, std::size_t start, std::vector<int>& bad, std::size_t& bad_size)
    {
        if (!within_bound(current.size(), static_cast<int>(picked.size()) + 1, t, k)) {
            bad = picked;
            bad_size = current.size();
            return true;
        }
        if (current.empty() || static_cast<int>(picked.size()) == t)
            return false;
        for (std::size_t i = start; i < sets.size(); ++i) {
            picked.push_back(static_cast<int>(i));
            bool hit = find(intersect(current, sets[i]), i + 1, bad, bad_size);
            picked.pop_back();
            if (hit)
                return true;
        }
        return false;
    }
};

bool star_holds(const std::vector<std::vector<int>>& family, std::size_t start, const std::vector<int>& current,
                int q, int t, const BigInt& k)
{
    if (q > 0 && !within_bound(current.size(), q, t, k))
        return false;
    if (q == t + 1 || (q > 0 && current.empty()))
        return true;
    for (std::size_t i = start; i < family.size(); ++i) {
        auto next = q == 0 ? family[i] : intersect(current, family[i]);
        if (!star_holds(family, i + 1, next, q + 1, t, k))
            return false;
    }
    return true;
}

}  // namespace

bool satisfies_star(const std::vector<std::vector<int>>& family, int t, const BigInt& k)
{
    return star_holds(family, 0, {}, 0, t, k);
}

std::variant<GreedyState, GreedyFailure> greedy_color_X(const Cover& h, const Gadget& gadget)
{
    check_gadget_cover(h, gadget);
    const auto& lab = gadget.labeling;
    const BigInt k = lab.k;
    CoverIndex index(h);
    GreedyState state;

    for (int j = 0; j <= lab.t; ++j)
        for (int i = 0; i < lab.t; ++i) {
            const Vertex x = lab.x(i, j);
            GreedyFailure failure{x, {}};
            bool done = false;
            for (CoverColor c : h.fibers[x]) {
                std::vector<int> s;
                for (CoverColor d : index.conflicts[c])
                    s.push_back(lab.clique_index(index.owner[d]).first);
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());

                SubsetSearch search{state.index_sets, lab.t, k, {}};
                std::vector<int> bad;
                std::size_t bad_size = 0;
                if (search.find(s, 0, bad, bad_size)) {
                    GreedyFailure::Rejection r{c, {}, static_cast<int>(bad_size)};
                    for (int b : bad)
                        r.subset.push_back(state.colored[b].first);
                    failure.rejected.push_back(std::move(r));
                    continue;
                }
                state.colored.emplace_back(x, c);
                state.index_sets.push_back(std::move(s));
                done = true;
                break;
            }
            if (!done)
                return failure;
        }
    if (!satisfies_star(state.index_sets, lab.t, k))
        throw Error("greedy X coloring left the family outside the bound");
    return state;
}

Transversal complete_cliques(const Cover& h, const Gadget& gadget, const GreedyState& state)
{
    check_gadget_cover(h, gadget);
    const auto& lab = gadget.labeling;
    CoverIndex index(h);
    std::vector<bool> blocked(h.color_count(), false);
    Transversal out(gadget.graph.order(), -1);
    for (auto [x, c] : state.colored) {
        if (!lab.in_X(x) || std::find(h.fibers[x].begin(), h.fibers[x].end(), c) == h.fibers[x].end())
            throw InputError("greedy state does not match the cover");
        out[x] = c;
        for (CoverColor d : index.conflicts[c])
            blocked[d] = true;
    }
    for (Vertex x : lab.X)
        if (out[x] < 0)
            throw InputError("greedy state leaves vertex " + std::to_string(x + 1) + " uncolored");

    for (int l = 0; l < lab.cliques; ++l) {
        std::vector<std::vector<CoverColor>> available(lab.t + 1);
        int blocked_count = 0;
        for (int j = 0; j <= lab.t; ++j)
            for (CoverColor c : h.fibers[lab.u(l, j)]) {
                if (blocked[c])
                    ++blocked_count;
                else
                    available[j].push_back(c);
            }
        if (blocked_count > lab.t)
            throw CliqueCompletionError("clique " + std::to_string(l + 1) + " has " + std::to_string(blocked_count) +
                                            " blocked colors, more than " + std::to_string(lab.t),
                                        l);
        std::vector<int> order(lab.t + 1);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return available[a].size() < available[b].size(); });
        std::vector<CoverColor> picks;
        for (int j : order) {
            auto it = std::find_if(available[j].begin(), available[j].end(), [&](CoverColor c) {
                return std::none_of(picks.begin(), picks.end(), [&](CoverColor p) { return index.conflicting(c, p); });
            });
            if (it == available[j].end())
                throw CliqueCompletionError("clique " + std::to_string(l + 1) + " cannot be completed", l);
            picks.push_back(*it);
            out[lab.u(l, j)] = *it;
        }
    }
    if (!is_transversal(h, out))
        throw Error("clique completion produced an invalid transversal");
    return out;
}

std::variant<Transversal, DpColorFailure> dp_color_G(const Cover& cover, const Composite& g)
{
    const auto& lab = g.labeling;
    const TokenAssignment f(g.graph.order(), lab.k - lab.t + 1);
    auto violations = validate_cover(g.graph, f, cover);
    if (!violations.empty())
        throw InputError("invalid cover: " + violations.front().message);

    CoverIndex index(cover);
    Transversal out(g.graph.order(), -1);
    std::vector<bool> blocked(cover.color_count(), false);
    for (Vertex y : lab.y) {
        out[y] = cover.fibers[y].front();
        for (CoverColor d : index.conflicts[out[y]])
            blocked[d] = true;
    }

    const int size = lab.gadget.order();
    for (int copy = 0; copy < lab.copies; ++copy) {
        std::vector<Vertex> vertices(size);
        std::iota(vertices.begin(), vertices.end(), lab.offset(copy));
        auto sub = restrict_cover(cover, vertices, [&](CoverColor c) { return !blocked[c]; });
        for (Vertex v = 0; v < size; ++v)
            if (static_cast<int>(sub.cover.fibers[v].size()) < lab.gadget.h[v])
                throw Error("vertex " + std::to_string(lab.offset(copy) + v + 1) + " kept fewer than h colors");
        Gadget gadget{sub.cover.base, lab.gadget};
        auto greedy = greedy_color_X(sub.cover, gadget);
        if (auto* failure = std::get_if<GreedyFailure>(&greedy)) {
            GreedyFailure mapped{failure->x + lab.offset(copy), {}};
            for (auto r : failure->rejected) {
                r.color = sub.original[r.color];
                for (Vertex& v : r.subset)
                    v += lab.offset(copy);
                mapped.rejected.push_back(std::move(r));
            }
            return DpColorFailure{copy, mapped.x, std::move(mapped)};
        }
        auto part = complete_cliques(sub.cover, gadget, std::get<GreedyState>(greedy));
        for (Vertex v = 0; v < size; ++v)
            out[lab.offset(copy) + v] = sub.original[part[v]];
    }
    if (!is_transversal(cover, out))
        throw Error("composite coloring produced an invalid transversal");
    return out;
}

nlohmann::json to_json(const Cover& h, const GreedyFailure& failure)
{
    auto rejected = nlohmann::json::array();
    for (const auto& r : failure.rejected) {
        auto subset = nlohmann::json::array();
        for (Vertex v : r.subset)
            subset.push_back(v + 1);
        rejected.push_back({{"color", h.names[r.color]}, {"subset", subset}, {"intersection", r.intersection}});
    }
    return {{"x", failure.x + 1}, {"rejected", rejected}};
}

}  // namespace colorlab
