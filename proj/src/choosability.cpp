#include "colorlab/choosability.hpp"

#include <algorithm>
#include <numeric>

#include "colorlab/error.hpp"

namespace colorlab {

namespace {

class ListColoringSearch {
public:
    ListColoringSearch(const Graph& g, const ListAssignment& lists) : g_(g), lists_(lists)
    {
        order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        color_.assign(order_.size(), -1);
        assigned_.assign(order_.size(), false);
    }

    std::optional<std::vector<Color>> run()
    {
        if (search(0))
            return color_;
        return std::nullopt;
    }

private:
    bool available(Vertex v, Color c) const
    {
        for (Vertex w : g_.neighbors(v))
            if (assigned_[w] && color_[w] == c)
                return false;
        return true;
    }

    bool has_option(Vertex v) const
    {
        return std::any_of(lists_[v].begin(), lists_[v].end(), [&](Color c) { return available(v, c); });
    }

    bool search(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        Vertex v = order_[depth];
        for (Color c : lists_[v]) {
            if (!available(v, c))
                continue;
            color_[v] = c;
            assigned_[v] = true;
            bool ok = true;
            for (Vertex w : g_.neighbors(v))
                if (!assigned_[w] && !has_option(w)) {
                    ok = false;
                    break;
                }
            if (ok && search(depth + 1))
                return true;
            assigned_[v] = false;
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const ListAssignment& lists_;
    std::vector<Vertex> order_;
    std::vector<Color> color_;
    std::vector<bool> assigned_;
};

struct BudgetHit {};

class AssignmentEnumerator {
public:
    AssignmentEnumerator(const Graph& g, const TokenAssignment& f, const ChoosabilityOptions& options)
        : g_(g), f_(f), options_(options), lists_(static_cast<std::size_t>(g.order()))
    {
        universe_ = options.universe > 0 ? options.universe : std::accumulate(f.begin(), f.end(), 0);
    }

    ChoosabilityResult run()
    {
        ChoosabilityResult result;
        try {
            if (fill(0, 0)) {
                result.verdict = Verdict::no;
                result.witness = lists_;
            } else {
                result.verdict = Verdict::yes;
            }
        } catch (const BudgetHit&) {
            result.verdict = Verdict::budget_exceeded;
        }
        result.assignments = count_;
        return result;
    }

private:
    // Returns true once a non-colorable assignment sits in lists_.
    bool fill(Vertex v, int seen)
    {
        if (v == g_.order()) {
            if (++count_ > options_.max_assignments)
                throw BudgetHit{};
            return !find_list_coloring(g_, lists_);
        }
        const int size = f_[v];
        for (int fresh = 0; fresh <= size && seen + fresh <= universe_; ++fresh) {
            const int reused = size - fresh;
            if (reused > seen)
                continue;
            std::vector<int> pick(static_cast<std::size_t>(reused));
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                auto& list = lists_[v];
                list.assign(pick.begin(), pick.end());
                for (int i = 0; i < fresh; ++i)
                    list.push_back(seen + i);
                if (fill(v + 1, seen + fresh))
                    return true;
                if (!next_combination(pick, seen))
                    break;
            }
        }
        lists_[v].clear();
        return false;
    }

    static bool next_combination(std::vector<int>& pick, int n)
    {
        const int r = static_cast<int>(pick.size());
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i)
            --i;
        if (i < 0)
            return false;
        ++pick[i];
        for (int j = i + 1; j < r; ++j)
            pick[j] = pick[j - 1] + 1;
        return true;
    }

    const Graph& g_;
    const TokenAssignment& f_;
    const ChoosabilityOptions& options_;
    ListAssignment lists_;
    int universe_ = 0;
    std::uint64_t count_ = 0;
};

}  // namespace

std::optional<std::vector<Color>> find_list_coloring(const Graph& g, const ListAssignment& lists)
{
    if (static_cast<int>(lists.size()) != g.order())
        throw InputError("list assignment does not cover the graph");
    return ListColoringSearch(g, lists).run();
}

ChoosabilityResult is_f_choosable(const Graph& g, const TokenAssignment& f, const ChoosabilityOptions& options)
{
    if (static_cast<int>(f.size()) != g.order())
        throw InputError("token assignment does not cover the graph");
    if (std::any_of(f.begin(), f.end(), [](int x) { return x < 0; }))
        throw InputError("negative list size");
    auto result = AssignmentEnumerator(g, f, options).run();
    if (result.witness && find_list_coloring(g, *result.witness))
        throw Error("internal error: witness list assignment is colorable");
    return result;
}

ParameterResult list_chromatic_number(const Graph& g, int cap, const ChoosabilityOptions& options)
{
    if (cap < 1)
        throw InputError("cap must be at least 1");
    for (int k = 1; k <= cap; ++k) {
        auto r = is_f_choosable(g, TokenAssignment(static_cast<std::size_t>(g.order()), k), options);
        if (r.verdict == Verdict::budget_exceeded)
            return {std::nullopt, true};
        if (r.verdict == Verdict::yes)
            return {k, false};
    }
    return {std::nullopt, false};
}

}  // namespace colorlab
