#include "colorlab/paintability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "colorlab/covers.hpp"
#include "colorlab/error.hpp"
#include "independent_sets.hpp"

namespace colorlab {

namespace {

using detail::bit;
using detail::Mask;

struct BudgetHit {};

/// Shared position handling for both game variants: normalization,
/// terminal tests, memo table and node budget.
class MinimaxBase {
public:
    MinimaxBase(const Graph& g, const TokenAssignment& f, const GameSolveOptions& options)
        : n_(g.order()), adj_(g.adjacency_masks()), options_(options)
    {
        if (static_cast<int>(f.size()) != n_)
            throw InputError("token assignment does not cover the graph");
        for (int t : f)
            if (t < 0 || t > 255)
                throw InputError("token counts must lie in 0..255");
        all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    }

protected:

    enum class Status { painter_wins, lister_wins, open };

    Status normalize(Mask& done, std::string& tokens) const
    {
        if (options_.prune_low_degree) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int v = 0; v < n_; ++v) {
                    if (done & bit(v))
                        continue;
                    int degree = std::popcount(adj_[v] & all_ & ~done);
                    if (static_cast<unsigned char>(tokens[v]) > degree) {
                        done |= bit(v);
                        changed = true;
                    }
                }
            }
        }
        bool starved = false;
        for (int v = 0; v < n_; ++v) {
            if (done & bit(v))
                tokens[v] = 0;
            else if (tokens[v] == 0)
                starved = true;
        }
        if (done == all_)
            return Status::painter_wins;
        return starved ? Status::lister_wins : Status::open;
    }

    std::string key(Mask done, const std::string& tokens) const
    {
        std::string k(reinterpret_cast<const char*>(&done), sizeof done);
        return k + tokens;
    }

    void count_node()
    {
        if (++nodes_ > options_.max_nodes)
            throw BudgetHit{};
    }

    int n_;
    std::vector<Mask> adj_;
    Mask all_ = 0;
    const GameSolveOptions& options_;
    std::unordered_map<std::string, bool> memo_;
    std::uint64_t nodes_ = 0;
};

class ListMinimax : MinimaxBase {
public:
    using MinimaxBase::MinimaxBase;

    GameSolveResult solve(const TokenAssignment& f)
    {
        std::string tokens(f.begin(), f.end());
        GameSolveResult result;
        try {
            result.verdict = lister_wins(0, tokens) ? Verdict::no : Verdict::yes;
        } catch (const BudgetHit&) {
            result.verdict = Verdict::budget_exceeded;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    bool lister_wins(Mask done, std::string tokens)
    {
        switch (normalize(done, tokens)) {
        case Status::painter_wins: return false;
        case Status::lister_wins: return true;
        case Status::open: break;
        }
        auto k = key(done, tokens);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;
        count_node();

        const Mask open = all_ & ~done;
        bool win = false;
        std::vector<Mask> replies;
        for (Mask reveal = open; reveal != 0 && !win; reveal = (reveal - 1) & open) {
            replies.clear();
            auto collect = [&](Mask m) { replies.push_back(m); };
            if (options_.maximal_replies)
                detail::maximal_independent_subsets(reveal, adj_, collect);
            else
                detail::independent_subsets(reveal, adj_, collect);
            std::stable_sort(replies.begin(), replies.end(),
                             [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
            std::string next = tokens;
            for (int v = 0; v < n_; ++v)
                if (reveal & bit(v))
                    --next[v];
            win = std::all_of(replies.begin(), replies.end(),
                              [&](Mask reply) { return lister_wins(done | reply, next); });
        }
        memo_[k] = win;
        return win;
    }
};

class DpMinimax : MinimaxBase {
public:
    DpMinimax(const Graph& g, const TokenAssignment& f, const GameSolveOptions& options) : MinimaxBase(g, f, options)
    {
        if (g.order() > 24)
            throw InputError("the DP-game solver supports at most 24 vertices");
    }

    GameSolveResult solve(const TokenAssignment& f)
    {
        std::string tokens(f.begin(), f.end());
        GameSolveResult result;
        try {
            result.verdict = lister_wins(0, tokens) ? Verdict::no : Verdict::yes;
        } catch (const BudgetHit&) {
            result.verdict = Verdict::budget_exceeded;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    /// Slot map of one support edge: forward[s] is the slot of `b` matched
    /// to slot s of `a` (or -1), backward the inverse.
    struct EdgeMap {
        int a, b;
        std::vector<int> forward, backward;
    };

    const std::vector<SlotMatching>& matchings(int x, int y)
    {
        auto [it, inserted] = matching_cache_.try_emplace({x, y});
        if (inserted)
            it->second = maximal_slot_matchings(x, y);
        return it->second;
    }

    /// Satisfiable vertex sets of the cover given by `maps` over `support`.
    std::vector<Mask> reply_family(const std::vector<int>& support, const std::vector<int>& sizes,
                                   const std::vector<EdgeMap>& maps)
    {
        const int p = static_cast<int>(support.size());
        std::vector<bool> reached(std::size_t{1} << p, false);
        std::vector<int> slot(static_cast<std::size_t>(p), -1);
        auto rec = [&](auto&& self, int i, unsigned local) -> void {
            if (i == p) {
                reached[local] = true;
                return;
            }
            for (int s = 0; s < sizes[i]; ++s) {
                bool ok = true;
                for (const auto& e : maps)
                    if (e.b == i && slot[e.a] >= 0 && e.forward[slot[e.a]] == s) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                slot[i] = s;
                self(self, i + 1, local | (1u << i));
                slot[i] = -1;
            }
            self(self, i + 1, local);
        };
        rec(rec, 0, 0u);

        std::vector<Mask> family;
        for (unsigned local = 0; local < reached.size(); ++local) {
            if (!reached[local])
                continue;
            if (options_.maximal_replies) {
                bool dominated = false;
                for (int i = 0; i < p && !dominated; ++i)
                    if (!(local & (1u << i)) && reached[local | (1u << i)])
                        dominated = true;
                if (dominated)
                    continue;
            }
            Mask global = 0;
            for (int i = 0; i < p; ++i)
                if (local & (1u << i))
                    global |= bit(support[i]);
            family.push_back(global);
        }
        std::stable_sort(family.begin(), family.end(),
                         [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
        return family;
    }

    bool try_sizes(Mask done, const std::string& tokens, const std::vector<int>& open, const std::vector<int>& m)
    {
        std::vector<int> support, sizes;
        std::vector<int> position(static_cast<std::size_t>(n_), -1);
        std::string next = tokens;
        for (std::size_t i = 0; i < open.size(); ++i)
            if (m[i] > 0) {
                position[open[i]] = static_cast<int>(support.size());
                support.push_back(open[i]);
                sizes.push_back(m[i]);
                next[open[i]] = static_cast<char>(tokens[open[i]] - m[i]);
            }

        std::vector<bool> active(static_cast<std::size_t>(n_), false);
        for (int v : support)
            active[v] = true;
        // Spanning forest of the support, grown as in the cover enumerator.
        std::vector<bool> seen(support.size(), false);
        std::set<std::pair<int, int>> tree;
        for (std::size_t root = 0; root < support.size(); ++root) {
            if (seen[root])
                continue;
            seen[root] = true;
            std::vector<int> queue{static_cast<int>(root)};
            for (std::size_t q = 0; q < queue.size(); ++q) {
                int a = queue[q];
                for (std::size_t b = 0; b < support.size(); ++b)
                    if (!seen[b] && (adj_[support[a]] & bit(support[b]))) {
                        seen[b] = true;
                        tree.insert({std::min(a, static_cast<int>(b)), std::max(a, static_cast<int>(b))});
                        queue.push_back(static_cast<int>(b));
                    }
            }
        }

        std::vector<EdgeMap> maps;
        std::vector<std::size_t> free_edges;
        std::vector<const std::vector<SlotMatching>*> options;
        for (int a = 0; a < static_cast<int>(support.size()); ++a)
            for (int b = a + 1; b < static_cast<int>(support.size()); ++b) {
                if (!(adj_[support[a]] & bit(support[b])))
                    continue;
                EdgeMap e{a, b, std::vector<int>(sizes[a], -1), std::vector<int>(sizes[b], -1)};
                if (tree.count({a, b})) {
                    for (int s = 0; s < std::min(sizes[a], sizes[b]); ++s)
                        e.forward[s] = e.backward[s] = s;
                } else {
                    free_edges.push_back(maps.size());
                    options.push_back(&matchings(sizes[a], sizes[b]));
                }
                maps.push_back(std::move(e));
            }

        std::set<std::vector<Mask>> tried;
        std::vector<std::size_t> digit(free_edges.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_edges.size(); ++i) {
                auto& e = maps[free_edges[i]];
                std::fill(e.forward.begin(), e.forward.end(), -1);
                std::fill(e.backward.begin(), e.backward.end(), -1);
                for (auto [sa, sb] : (*options[i])[digit[i]]) {
                    e.forward[sa] = sb;
                    e.backward[sb] = sa;
                }
            }
            auto family = reply_family(support, sizes, maps);
            if (tried.insert(family).second) {
                bool win = std::all_of(family.begin(), family.end(),
                                       [&](Mask reply) { return lister_wins(done | reply, next); });
                if (win)
                    return true;
            }
            std::size_t i = free_edges.size();
            bool carried = true;
            while (i > 0 && carried) {
                --i;
                if (++digit[i] < options[i]->size())
                    carried = false;
                else
                    digit[i] = 0;
            }
            if (carried)
                return false;
        }
    }

    bool lister_wins(Mask done, std::string tokens)
    {
        switch (normalize(done, tokens)) {
        case Status::painter_wins: return false;
        case Status::lister_wins: return true;
        case Status::open: break;
        }
        auto k = key(done, tokens);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;
        count_node();

        std::vector<int> open;
        for (int v = 0; v < n_; ++v)
            if (!(done & bit(v)))
                open.push_back(v);
        // Fiber sizes in decreasing lexicographic order, largest reveal first.
        std::vector<int> m(open.size());
        for (std::size_t i = 0; i < open.size(); ++i)
            m[i] = static_cast<unsigned char>(tokens[open[i]]);
        bool win = false;
        while (!win) {
            if (std::any_of(m.begin(), m.end(), [](int x) { return x > 0; }))
                win = try_sizes(done, tokens, open, m);
            std::size_t i = m.size();
            bool borrowed = true;
            while (i > 0 && borrowed) {
                --i;
                if (m[i] > 0) {
                    --m[i];
                    borrowed = false;
                } else {
                    m[i] = static_cast<unsigned char>(tokens[open[i]]);
                }
            }
            if (borrowed)
                break;
        }
        memo_[k] = win;
        return win;
    }

    std::map<std::pair<int, int>, std::vector<SlotMatching>> matching_cache_;
};

template <class Solver>
GameParameterResult least_constant(const Graph& g, int cap, const GameSolveOptions& options)
{
    if (cap < 1)
        throw InputError("cap must be at least 1");
    GameParameterResult out;
    for (int k = 1; k <= cap; ++k) {
        TokenAssignment f(static_cast<std::size_t>(g.order()), k);
        auto r = Solver(g, f, options).solve(f);
        out.nodes += r.nodes;
        if (r.verdict == Verdict::budget_exceeded) {
            out.budget_exceeded = true;
            return out;
        }
        if (r.verdict == Verdict::yes) {
            out.value = k;
            return out;
        }
    }
    return out;
}

}  // namespace

GameSolveResult is_f_paintable(const Graph& g, const TokenAssignment& f, const GameSolveOptions& options)
{
    return ListMinimax(g, f, options).solve(f);
}

GameSolveResult is_dp_f_paintable(const Graph& g, const TokenAssignment& f, const GameSolveOptions& options)
{
    return DpMinimax(g, f, options).solve(f);
}

GameParameterResult paint_number(const Graph& g, int cap, const GameSolveOptions& options)
{
    return least_constant<ListMinimax>(g, cap, options);
}

GameParameterResult dp_paint_number(const Graph& g, int cap, const GameSolveOptions& options)
{
    return least_constant<DpMinimax>(g, cap, options);
}

}  // namespace colorlab
