#include "colorlab/covers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "colorlab/error.hpp"
#include "colorlab/io.hpp"

namespace colorlab {

namespace {

std::string vname(Vertex v) { return std::to_string(v + 1); }

std::string describe(const std::vector<CoverViolation>& violations)
{
    std::string out;
    for (const auto& v : violations)
        out += (out.empty() ? "" : "; ") + v.message;
    return out;
}

}  // namespace

std::vector<CoverViolation> validate_cover(const Cover& h)
{
    using Kind = CoverViolation::Kind;
    std::vector<CoverViolation> out;
    const int n = h.base.order();
    if (static_cast<int>(h.fibers.size()) != n) {
        out.push_back({Kind::vertex_count, "cover has " + std::to_string(h.fibers.size()) +
                                               " fibers for a base graph on " + std::to_string(n) + " vertices"});
        return out;
    }
    std::vector<Vertex> owner(static_cast<std::size_t>(h.color_count()), -1);
    for (Vertex v = 0; v < n; ++v)
        for (CoverColor c : h.fibers[v]) {
            if (c < 0 || c >= h.color_count()) {
                out.push_back({Kind::unknown_color, "unknown color id in fiber of vertex " + vname(v)});
                continue;
            }
            if (owner[c] >= 0) {
                out.push_back({Kind::fiber_overlap, "color " + h.names[c] + " lies above vertices " +
                                                        vname(owner[c]) + " and " + vname(v)});
                continue;
            }
            owner[c] = v;
        }

    std::set<std::pair<CoverColor, CoverColor>> seen;
    std::map<std::pair<CoverColor, Vertex>, int> touches;
    for (auto [a, b] : h.cross_edges) {
        if (a < 0 || b < 0 || a >= h.color_count() || b >= h.color_count() || owner[a] < 0 || owner[b] < 0) {
            out.push_back({Kind::unknown_color, "cross edge uses a color outside every fiber"});
            continue;
        }
        Vertex u = owner[a], v = owner[b];
        if (u == v || !h.base.adjacent(u, v)) {
            out.push_back({Kind::stray_edge, "cross edge " + h.names[a] + "-" + h.names[b] +
                                                 " does not follow a base edge (" + vname(u) + "," + vname(v) + ")"});
            continue;
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            continue;
        if (++touches[{a, v}] == 2)
            out.push_back({Kind::not_a_matching, "color " + h.names[a] + " above " + vname(u) +
                                                     " matches two colors above " + vname(v) + " (edge " + vname(u) +
                                                     "," + vname(v) + "): not a matching"});
        if (++touches[{b, u}] == 2)
            out.push_back({Kind::not_a_matching, "color " + h.names[b] + " above " + vname(v) +
                                                     " matches two colors above " + vname(u) + " (edge " + vname(v) +
                                                     "," + vname(u) + "): not a matching"});
    }
    return out;
}

std::vector<CoverViolation> validate_cover(const Graph& g, const TokenAssignment& f, const Cover& h)
{
    using Kind = CoverViolation::Kind;
    std::vector<CoverViolation> out;
    if (!(h.base == g))
        out.push_back({Kind::vertex_count, "cover base differs from the given graph"});
    if (static_cast<int>(f.size()) != g.order()) {
        out.push_back({Kind::vertex_count, "token assignment does not cover the graph"});
        return out;
    }
    auto structural = validate_cover(h);
    out.insert(out.end(), structural.begin(), structural.end());
    if (static_cast<int>(h.fibers.size()) == g.order())
        for (Vertex v = 0; v < g.order(); ++v)
            if (static_cast<int>(h.fibers[v].size()) != f[v])
                out.push_back({Kind::fiber_size, "fiber size " + std::to_string(h.fibers[v].size()) + " at vertex " +
                                                     vname(v) + ", expected " + std::to_string(f[v])});
    return out;
}

CoverIndex::CoverIndex(const Cover& h)
    : owner(static_cast<std::size_t>(h.color_count()), -1), conflicts(static_cast<std::size_t>(h.color_count()))
{
    for (Vertex v = 0; v < static_cast<Vertex>(h.fibers.size()); ++v)
        for (CoverColor c : h.fibers[v])
            owner[c] = v;
    for (auto [a, b] : h.cross_edges) {
        conflicts[a].push_back(b);
        conflicts[b].push_back(a);
    }
    for (auto& list : conflicts) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

bool CoverIndex::conflicting(CoverColor a, CoverColor b) const
{
    const auto& list = conflicts[a];
    return std::binary_search(list.begin(), list.end(), b);
}

bool is_transversal(const Cover& h, const Transversal& chosen)
{
    if (static_cast<int>(chosen.size()) != h.base.order() || h.fibers.size() != chosen.size())
        return false;
    for (std::size_t v = 0; v < chosen.size(); ++v) {
        const auto& fiber = h.fibers[v];
        if (std::find(fiber.begin(), fiber.end(), chosen[v]) == fiber.end())
            return false;
    }
    std::vector<bool> in(static_cast<std::size_t>(h.color_count()), false);
    for (CoverColor c : chosen)
        in[c] = true;
    for (auto [a, b] : h.cross_edges)
        if (in[a] && in[b])
            return false;
    return true;
}

namespace {

class TransversalSearch {
public:
    explicit TransversalSearch(const Cover& h) : h_(h), index_(h), blocked_(static_cast<std::size_t>(h.color_count()), 0)
    {
        order_.resize(static_cast<std::size_t>(h.base.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return h.base.degree(a) > h.base.degree(b); });
        chosen_.assign(order_.size(), -1);
    }

    std::optional<Transversal> run()
    {
        if (search(0))
            return chosen_;
        return std::nullopt;
    }

private:
    bool has_option(Vertex v) const
    {
        return std::any_of(h_.fibers[v].begin(), h_.fibers[v].end(), [&](CoverColor c) { return blocked_[c] == 0; });
    }

    bool search(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        Vertex v = order_[depth];
        for (CoverColor c : h_.fibers[v]) {
            if (blocked_[c] != 0)
                continue;
            for (CoverColor d : index_.conflicts[c])
                ++blocked_[d];
            chosen_[v] = c;
            bool ok = true;
            for (CoverColor d : index_.conflicts[c]) {
                Vertex w = index_.owner[d];
                if (chosen_[w] < 0 && !has_option(w)) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(depth + 1))
                return true;
            chosen_[v] = -1;
            for (CoverColor d : index_.conflicts[c])
                --blocked_[d];
        }
        return false;
    }

    const Cover& h_;
    CoverIndex index_;
    std::vector<int> blocked_;
    std::vector<Vertex> order_;
    Transversal chosen_;
};

std::optional<Transversal> find_transversal_unchecked(const Cover& h)
{
    return TransversalSearch(h).run();
}

}  // namespace

std::optional<Transversal> find_transversal(const Cover& h)
{
    auto violations = validate_cover(h);
    if (!violations.empty())
        throw InputError("invalid cover: " + describe(violations));
    return find_transversal_unchecked(h);
}

Cover lists_to_cover(const Graph& g, const ListAssignment& lists, const std::vector<std::string>& color_names)
{
    if (static_cast<int>(lists.size()) != g.order())
        throw InputError("list assignment does not cover the graph");
    Cover h;
    h.base = g;
    h.fibers.resize(lists.size());
    std::vector<std::map<Color, CoverColor>> id_of(lists.size());
    for (Vertex v = 0; v < g.order(); ++v)
        for (Color c : lists[v]) {
            CoverColor id = h.color_count();
            if (!id_of[v].emplace(c, id).second)
                throw InputError("duplicate color in list at vertex " + vname(v));
            h.fibers[v].push_back(id);
            auto cname = static_cast<std::size_t>(c) < color_names.size() ? color_names[c] : color_name(c);
            h.names.push_back(vname(v) + ":" + cname);
        }
    for (auto [u, v] : g.edges())
        for (auto [c, id] : id_of[u]) {
            auto it = id_of[v].find(c);
            if (it != id_of[v].end())
                h.cross_edges.emplace_back(id, it->second);
        }
    return h;
}

Cover cover_from_slot_matchings(const Graph& g, const TokenAssignment& f, const std::vector<SlotMatching>& matchings)
{
    auto edges = g.edges();
    if (matchings.size() != edges.size())
        throw InputError("one slot matching per edge is required");
    Cover h;
    h.base = g;
    h.fibers.resize(static_cast<std::size_t>(g.order()));
    std::vector<CoverColor> first(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        first[v] = h.color_count();
        for (int s = 0; s < f[v]; ++s) {
            h.fibers[v].push_back(h.color_count());
            h.names.push_back(vname(v) + "." + std::to_string(s + 1));
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        for (auto [su, sv] : matchings[e]) {
            if (su < 0 || su >= f[u] || sv < 0 || sv >= f[v])
                throw InputError("slot out of range on edge " + vname(u) + "," + vname(v));
            h.cross_edges.emplace_back(first[u] + su, first[v] + sv);
        }
    }
    return h;
}

std::vector<SlotMatching> maximal_slot_matchings(int a, int b)
{
    const bool flip = a > b;
    const int small = flip ? b : a, large = flip ? a : b;
    std::vector<SlotMatching> out;
    std::vector<int> image;
    std::vector<bool> used(static_cast<std::size_t>(std::max(large, 0)), false);
    std::function<void()> extend = [&] {
        if (static_cast<int>(image.size()) == small) {
            SlotMatching m;
            for (int s = 0; s < small; ++s)
                m.push_back(flip ? std::pair{image[s], s} : std::pair{s, image[s]});
            out.push_back(std::move(m));
            return;
        }
        for (int target = 0; target < large; ++target) {
            if (used[target])
                continue;
            used[target] = true;
            image.push_back(target);
            extend();
            image.pop_back();
            used[target] = false;
        }
    };
    extend();
    return out;
}

std::uint64_t for_each_canonical_cover(const Graph& g, const TokenAssignment& f,
                                       const std::function<bool(const Cover&)>& visit)
{
    if (static_cast<int>(f.size()) != g.order())
        throw InputError("token assignment does not cover the graph");
    auto edges = g.edges();
    auto tree = spanning_forest(g);
    std::set<Edge> in_tree(tree.begin(), tree.end());

    std::vector<SlotMatching> matchings(edges.size());
    std::vector<std::size_t> free_edges;
    std::vector<std::vector<SlotMatching>> options;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (in_tree.count(edges[e])) {
            for (int s = 0; s < std::min(f[u], f[v]); ++s)
                matchings[e].emplace_back(s, s);
        } else {
            free_edges.push_back(e);
            options.push_back(maximal_slot_matchings(f[u], f[v]));
        }
    }

    std::vector<std::size_t> digit(free_edges.size(), 0);
    std::uint64_t count = 0;
    while (true) {
        for (std::size_t i = 0; i < free_edges.size(); ++i)
            matchings[free_edges[i]] = options[i][digit[i]];
        ++count;
        if (!visit(cover_from_slot_matchings(g, f, matchings)))
            return count;
        // Odometer with the last free edge turning fastest.
        std::size_t i = free_edges.size();
        while (i > 0) {
            --i;
            if (++digit[i] < options[i].size())
                break;
            digit[i] = 0;
            if (i == 0)
                return count;
        }
        if (free_edges.empty())
            return count;
    }
}

DpColorability is_dp_f_colorable(const Graph& g, const TokenAssignment& f)
{
    DpColorability result;
    result.colorable = true;
    result.covers_checked = for_each_canonical_cover(g, f, [&](const Cover& h) {
        if (find_transversal_unchecked(h))
            return true;
        result.colorable = false;
        result.witness = h;
        return false;
    });
    if (result.witness && find_transversal(*result.witness))
        throw Error("internal error: witness cover admits a transversal");
    return result;
}

std::optional<int> dp_chromatic_number(const Graph& g, int cap)
{
    if (cap < 1)
        throw InputError("cap must be at least 1");
    for (int k = 1; k <= cap; ++k)
        if (is_dp_f_colorable(g, TokenAssignment(static_cast<std::size_t>(g.order()), k)).colorable)
            return k;
    return std::nullopt;
}

SubCover restrict_cover(const Cover& h, const std::vector<Vertex>& vertices, const std::function<bool(CoverColor)>& keep)
{
    SubCover out;
    out.cover.base = h.base.induced(vertices);
    out.cover.fibers.resize(vertices.size());
    std::vector<CoverColor> new_id(static_cast<std::size_t>(h.color_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (CoverColor c : h.fibers[vertices[i]]) {
            if (!keep(c))
                continue;
            new_id[c] = out.cover.color_count();
            out.cover.fibers[i].push_back(new_id[c]);
            out.cover.names.push_back(h.names[c]);
            out.original.push_back(c);
        }
    for (auto [a, b] : h.cross_edges)
        if (new_id[a] >= 0 && new_id[b] >= 0)
            out.cover.cross_edges.emplace_back(new_id[a], new_id[b]);
    return out;
}

nlohmann::json cover_to_json(const Cover& h)
{
    nlohmann::json fibers = nlohmann::json::object();
    for (std::size_t v = 0; v < h.fibers.size(); ++v) {
        auto list = nlohmann::json::array();
        for (CoverColor c : h.fibers[v])
            list.push_back(h.names[c]);
        fibers[std::to_string(v + 1)] = list;
    }
    auto edges = nlohmann::json::array();
    for (auto [a, b] : h.cross_edges)
        edges.push_back({h.names[a], h.names[b]});
    return {{"graph", graph_to_json(h.base)}, {"fibers", fibers}, {"cross_edges", edges}};
}

Cover cover_from_json(const nlohmann::json& j)
{
    try {
        Cover h;
        h.base = graph_from_json(j.at("graph"));
        h.fibers.resize(static_cast<std::size_t>(h.base.order()));
        std::map<int, const nlohmann::json*> by_vertex;
        for (const auto& [key, value] : j.at("fibers").items()) {
            int v = std::stoi(key);
            if (v < 1 || v > h.base.order() || std::to_string(v) != key)
                throw InputError("fiber key out of range: " + key);
            by_vertex[v - 1] = &value;
        }
        std::map<std::string, CoverColor> ids;
        for (const auto& [v, list] : by_vertex)
            for (const auto& name : *list) {
                auto id_name = name.get<std::string>();
                auto [it, inserted] = ids.emplace(id_name, h.color_count());
                if (inserted)
                    h.names.push_back(id_name);
                h.fibers[v].push_back(it->second);
            }
        for (const auto& e : j.at("cross_edges")) {
            auto a = ids.find(e.at(0).get<std::string>()), b = ids.find(e.at(1).get<std::string>());
            if (a == ids.end() || b == ids.end())
                throw InputError("cross edge names a color outside every fiber");
            h.cross_edges.emplace_back(a->second, b->second);
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed cover JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InputError("malformed cover JSON: non-numeric fiber key");
    }
}

nlohmann::json transversal_to_json(const Cover& h, const Transversal& chosen)
{
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t v = 0; v < chosen.size(); ++v)
        out[std::to_string(v + 1)] = h.names[chosen[v]];
    return out;
}

}  // namespace colorlab
