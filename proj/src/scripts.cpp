#include "colorlab/scripts.hpp"

#include <algorithm>

#include "colorlab/error.hpp"

namespace colorlab {

namespace {

bool contains(const std::vector<Vertex>& vs, Vertex v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

class GadgetScript : public ListListerScript {
public:
    GadgetScript(int t, int k) : gadget_(gadget_H(t, k)), bad_(bad_list_for_bipartite(t, k)) {}

    std::string name() const override { return "h-lister"; }

    void check_domain(const Graph& g, const TokenAssignment&) const override
    {
        if (!(g == gadget_.graph))
            throw ScriptError("h-lister: graph is not H(" + std::to_string(gadget_.labeling.t) + "," +
                              std::to_string(gadget_.labeling.k) + ")");
    }

    std::optional<std::vector<Vertex>> next_move(const ListGameState& state,
                                                std::span<const ListTurn> history) const override
    {
        ListReplay replay(initial_state(state, history), history);
        if (play_gadget_strategy(replay, gadget_.labeling, bad_, 0))
            return std::nullopt;
        return replay.take_pending();
    }

private:
    Gadget gadget_;
    BadList bad_;
};

class CompositeScript : public ListListerScript {
public:
    CompositeScript(int t, int k) : composite_(graph_G(t, k)), bad_(bad_list_for_bipartite(t, k)) {}

    std::string name() const override { return "g-lister"; }

    void check_domain(const Graph& g, const TokenAssignment&) const override
    {
        if (!(g == composite_.graph))
            throw ScriptError("g-lister: graph is not G(" + std::to_string(composite_.labeling.t) + "," +
                              std::to_string(composite_.labeling.k) + ")");
    }

    std::optional<std::vector<Vertex>> next_move(const ListGameState& state,
                                                std::span<const ListTurn> history) const override
    {
        ListReplay replay(initial_state(state, history), history);
        if (play(replay))
            return std::nullopt;
        return replay.take_pending();
    }

private:
    bool play(ListReplay& replay) const
    {
        const auto& lab = composite_.labeling;
        std::vector<int> taken_on(lab.coordinates, -1);
        for (int i = 0; i < lab.k; ++i)
            for (int j = 0; j < lab.coordinates; ++j) {
                const auto& s = replay.state();
                std::vector<Vertex> reveal;
                const Vertex y = lab.y[j];
                if (!s.colored(y) && s.tokens(y) > 0)
                    reveal.push_back(y);
                for (int c = 0; c < lab.copies; ++c) {
                    if (lab.tuple(c)[j] != i)
                        continue;
                    for (Vertex u : lab.gadget.U) {
                        const Vertex v = lab.offset(c) + u;
                        if (!s.colored(v) && s.tokens(v) > 0)
                            reveal.push_back(v);
                    }
                }
                if (reveal.empty())
                    continue;
                if (!replay.play(std::move(reveal)))
                    return false;
                if (contains(replay.last_reply(), y))
                    taken_on[j] = i;
            }
        if (std::find(taken_on.begin(), taken_on.end(), -1) != taken_on.end())
            return true;
        const int copy = lab.copy_of_tuple(taken_on);
        return play_gadget_strategy(replay, lab.gadget, bad_, lab.offset(copy));
    }

    Composite composite_;
    BadList bad_;
};

}  // namespace

bool play_gadget_strategy(ListReplay& replay, const GadgetLabeling& lab, const BadList& bad, Vertex offset)
{
    for (int turn = 0; turn < lab.t; ++turn) {
        const auto& s = replay.state();
        std::vector<Vertex> reveal;
        for (Vertex u : lab.U)
            if (!s.colored(offset + u) && s.tokens(offset + u) > 0)
                reveal.push_back(offset + u);
        if (reveal.empty())
            continue;
        if (!replay.play(std::move(reveal)))
            return false;
    }

    const auto& s = replay.state();
    int best = 0;
    int best_count = -1;
    for (int j = 0; j <= lab.t; ++j) {
        int count = 0;
        for (int l = 0; l < lab.cliques; ++l)
            count += !s.colored(offset + lab.u(l, j));
        if (count > best_count) {
            best = j;
            best_count = count;
        }
    }
    const int leaves = static_cast<int>(bad.lists.size()) - lab.t;
    ListAssignment lists(s.graph().order());
    for (int i = 0; i < lab.t; ++i)
        lists[offset + lab.x(i, best)] = bad.lists[i];
    int placed = 0;
    for (int l = 0; l < lab.cliques && placed < leaves; ++l) {
        const Vertex v = offset + lab.u(l, best);
        if (!s.colored(v))
            lists[v] = bad.lists[lab.t + placed++];
    }
    return play_list_endgame(replay, lists);
}

std::unique_ptr<ListListerScript> h_lister_script(int t, int k) { return std::make_unique<GadgetScript>(t, k); }

std::unique_ptr<ListListerScript> g_lister_script(int t, int k) { return std::make_unique<CompositeScript>(t, k); }

}  // namespace colorlab
