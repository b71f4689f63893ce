#include "colorlab/certify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "colorlab/error.hpp"

namespace colorlab {

namespace {

struct BudgetHit {};

template <class Turn>
struct VariantTraits;

template <>
struct VariantTraits<ListTurn> {
    using State = ListGameState;
    using Script = ListListerScript;
    using Move = std::vector<Vertex>;
    using Reply = std::vector<Vertex>;

    static ListTurn make_turn(const Move& m, const Reply& r) { return {m, r}; }
    static Move canonical(Move m)
    {
        std::sort(m.begin(), m.end());
        return m;
    }
    static nlohmann::json move_json(const Move& m)
    {
        auto out = nlohmann::json::array();
        for (Vertex v : m)
            out.push_back(v + 1);
        return out;
    }
    static nlohmann::json reply_json(const Move&, const Reply& r) { return move_json(r); }
};

template <>
struct VariantTraits<DpTurn> {
    using State = DpGameState;
    using Script = DpListerScript;
    using Move = Cover;
    using Reply = std::vector<CoverColor>;

    static DpTurn make_turn(const Move& m, const Reply& r) { return {m, r}; }
    static Move canonical(Move m) { return m; }
    static nlohmann::json move_json(const Move& m) { return cover_to_json(m); }
    static nlohmann::json reply_json(const Move& m, const Reply& r)
    {
        auto out = nlohmann::json::array();
        for (CoverColor c : r)
            out.push_back(m.names[c]);
        return out;
    }
};

template <class Turn>
class Certifier {
    using Traits = VariantTraits<Turn>;
    using State = typename Traits::State;
    using Script = typename Traits::Script;

public:
    Certifier(const Script& script, const CertifyOptions& options) : script_(script), options_(options) {}

    BasicCertificate<Turn> run(const State& root)
    {
        BasicCertificate<Turn> cert;
        cert.nodes = 1;
        std::vector<Turn> history;
        if (options_.max_nodes < 1) {
            cert.verdict = CertificateVerdict::budget_exceeded;
            return cert;
        }
        if (auto leaf = classify(root)) {
            cert.verdict = *leaf;
            if (options_.record_trace)
                cert.trace = leaf_json(*leaf);
            return cert;
        }
        auto move = script_.next_move(root, history);
        if (move)
            move = Traits::canonical(std::move(*move));
        if (!move) {
            cert.verdict = CertificateVerdict::painter_survives;
            if (options_.record_trace)
                cert.trace = leaf_json(cert.verdict);
            return cert;
        }
        State revealed = apply_reveal(root, *move);
        auto replies = legal_painter_replies(revealed, options_.maximal_replies);

        struct Branch {
            CertificateVerdict verdict = CertificateVerdict::lister_wins;
            std::uint64_t nodes = 0;
            std::vector<Turn> line;
            nlohmann::json trace;
        };
        std::vector<Branch> branches(replies.size());
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_failure{replies.size()};
        std::atomic<std::size_t> last_done{0};
        std::atomic<std::uint64_t> total{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= replies.size() || i > first_failure.load())
                    return;
                auto& b = branches[i];
                State child = revealed;
                child.reply(replies[i]);
                std::vector<Turn> line{Traits::make_turn(*move, replies[i])};
                Context ctx;
                try {
                    b.verdict = search(child, line, ctx, options_.record_trace ? &b.trace : nullptr);
                    b.line = std::move(ctx.failure_line);
                } catch (const BudgetHit&) {
                    b.verdict = CertificateVerdict::budget_exceeded;
                }
                b.nodes = ctx.nodes;
                std::size_t cutoff = replies.size();
                if (b.verdict != CertificateVerdict::lister_wins)
                    cutoff = i;
                // once finished branches alone pass the budget, the in-order
                // scan stops at or before the largest finished index
                std::size_t last = last_done.load();
                while (last < i && !last_done.compare_exchange_weak(last, i)) {
                }
                if ((total += b.nodes) > options_.max_nodes)
                    cutoff = std::min(cutoff, last_done.load());
                std::size_t seen = first_failure.load();
                while (cutoff < seen && !first_failure.compare_exchange_weak(seen, cutoff)) {
                }
            }
        };
        const int threads = std::max(1, options_.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(worker);
            for (auto& th : pool)
                th.join();
        }

        cert.verdict = CertificateVerdict::lister_wins;
        nlohmann::json reply_traces = nlohmann::json::array();
        for (std::size_t i = 0; i < branches.size(); ++i) {
            auto& b = branches[i];
            cert.nodes += b.nodes;
            if (options_.record_trace && b.verdict != CertificateVerdict::budget_exceeded)
                reply_traces.push_back(
                    {{"reply", Traits::reply_json(*move, replies[i])}, {"then", std::move(b.trace)}});
            if (b.verdict == CertificateVerdict::budget_exceeded || cert.nodes > options_.max_nodes) {
                cert.verdict = CertificateVerdict::budget_exceeded;
                break;
            }
            if (b.verdict == CertificateVerdict::painter_survives) {
                cert.verdict = CertificateVerdict::painter_survives;
                cert.counterexample = std::move(b.line);
                break;
            }
        }
        if (options_.record_trace && cert.verdict != CertificateVerdict::budget_exceeded)
            cert.trace = nlohmann::json{{"reveal", Traits::move_json(*move)}, {"replies", std::move(reply_traces)}};
        return cert;
    }

private:
    std::optional<CertificateVerdict> classify(const State& s) const
    {
        if (s.painter_won())
            return CertificateVerdict::painter_survives;
        if (s.lister_won())
            return CertificateVerdict::lister_wins;
        return std::nullopt;
    }

    static nlohmann::json leaf_json(CertificateVerdict v) { return std::string(to_string(v)); }

    State apply_reveal(const State& s, typename Traits::Move move) const
    {
        State next = s;
        try {
            next.reveal(std::move(move));
        } catch (const IllegalMoveError& e) {
            throw ScriptError(script_.name() + " played an illegal move: " + e.what());
        }
        return next;
    }

    struct Context {
        std::uint64_t nodes = 0;
        std::vector<Turn> failure_line;
    };

    CertificateVerdict search(const State& s, std::vector<Turn>& history, Context& ctx, nlohmann::json* trace) const
    {
        if (++ctx.nodes > options_.max_nodes)
            throw BudgetHit{};
        auto leaf = classify(s);
        if (!leaf) {
            auto move = script_.next_move(s, history);
            if (!move)
                leaf = CertificateVerdict::painter_survives;
            else
                return expand(s, Traits::canonical(std::move(*move)), history, ctx, trace);
        }
        if (*leaf == CertificateVerdict::painter_survives)
            ctx.failure_line = history;
        if (trace)
            *trace = leaf_json(*leaf);
        return *leaf;
    }

    CertificateVerdict expand(const State& s, const typename Traits::Move& move, std::vector<Turn>& history,
                              Context& ctx, nlohmann::json* trace) const
    {
        State revealed = apply_reveal(s, move);
        auto replies = legal_painter_replies(revealed, options_.maximal_replies);
        nlohmann::json reply_traces = nlohmann::json::array();
        for (const auto& reply : replies) {
            State child = revealed;
            child.reply(reply);
            history.push_back(Traits::make_turn(move, reply));
            nlohmann::json child_trace;
            auto verdict = search(child, history, ctx, trace ? &child_trace : nullptr);
            history.pop_back();
            if (trace)
                reply_traces.push_back({{"reply", Traits::reply_json(move, reply)}, {"then", std::move(child_trace)}});
            if (verdict == CertificateVerdict::painter_survives) {
                if (trace)
                    *trace = {{"reveal", Traits::move_json(move)}, {"replies", std::move(reply_traces)}};
                return verdict;
            }
        }
        if (trace)
            *trace = {{"reveal", Traits::move_json(move)}, {"replies", std::move(reply_traces)}};
        return CertificateVerdict::lister_wins;
    }

    const Script& script_;
    const CertifyOptions& options_;
};

template <class Turn, class Script>
BasicCertificate<Turn> certify(const Graph& g, const TokenAssignment& tokens, const Script& script,
                               const CertifyOptions& options)
{
    script.check_domain(g, tokens);
    typename VariantTraits<Turn>::State root(std::make_shared<const Graph>(g), tokens);
    return Certifier<Turn>(script, options).run(root);
}

}  // namespace

std::string_view to_string(CertificateVerdict v)
{
    switch (v) {
    case CertificateVerdict::lister_wins: return "LISTER_WINS";
    case CertificateVerdict::painter_survives: return "PAINTER_SURVIVES";
    case CertificateVerdict::budget_exceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

ListCertificate certify_lister_strategy(const Graph& g, const TokenAssignment& tokens, const ListListerScript& script,
                                        const CertifyOptions& options)
{
    return certify<ListTurn>(g, tokens, script, options);
}

DpCertificate certify_lister_strategy(const Graph& g, const TokenAssignment& tokens, const DpListerScript& script,
                                      const CertifyOptions& options)
{
    return certify<DpTurn>(g, tokens, script, options);
}

nlohmann::json to_json(const ListTurn& turn)
{
    return {{"reveal", VariantTraits<ListTurn>::move_json(turn.reveal)},
            {"reply", VariantTraits<ListTurn>::move_json(turn.reply)}};
}

nlohmann::json to_json(const DpTurn& turn)
{
    return {{"cover", cover_to_json(turn.cover)}, {"reply", VariantTraits<DpTurn>::reply_json(turn.cover, turn.reply)}};
}

namespace {

template <class Turn>
nlohmann::json certificate_json(const BasicCertificate<Turn>& c)
{
    nlohmann::json out;
    out["verdict"] = std::string(to_string(c.verdict));
    out["nodes"] = c.nodes;
    if (c.verdict == CertificateVerdict::painter_survives) {
        auto line = nlohmann::json::array();
        for (const auto& turn : c.counterexample)
            line.push_back(to_json(turn));
        out["counterexample"] = std::move(line);
    } else {
        out["counterexample"] = nullptr;
    }
    if (c.trace)
        out["trace"] = *c.trace;
    return out;
}

class RevealAll : public ListListerScript {
public:
    std::string name() const override { return "reveal-all"; }
    void check_domain(const Graph&, const TokenAssignment&) const override {}
    std::optional<std::vector<Vertex>> next_move(const ListGameState& state,
                                                std::span<const ListTurn>) const override
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < state.graph().order(); ++v)
            if (!state.colored(v) && state.tokens(v) > 0)
                out.push_back(v);
        if (out.empty())
            return std::nullopt;
        return out;
    }
};

class Endgame : public ListListerScript {
public:
    Endgame(const Graph& g, ListAssignment lists) : graph_(g), lists_(std::move(lists)) {}

    std::string name() const override { return "endgame"; }

    void check_domain(const Graph& g, const TokenAssignment& tokens) const override
    {
        if (!(g == graph_))
            throw ScriptError("endgame: graph differs from the script's graph");
        if (tokens.size() != lists_.size())
            throw ScriptError("endgame: token assignment has the wrong length");
        for (std::size_t v = 0; v < lists_.size(); ++v)
            if (!lists_[v].empty() && static_cast<int>(lists_[v].size()) != tokens[v])
                throw ScriptError("endgame: vertex " + std::to_string(v + 1) + " has " + std::to_string(tokens[v]) +
                                  " tokens but a list of size " + std::to_string(lists_[v].size()));
    }

    std::optional<std::vector<Vertex>> next_move(const ListGameState& state,
                                                std::span<const ListTurn> history) const override
    {
        ListReplay replay(initial_state(state, history), history);
        if (play_list_endgame(replay, lists_))
            return std::nullopt;
        return replay.take_pending();
    }

private:
    Graph graph_;
    ListAssignment lists_;
};

class SingleCover : public DpListerScript {
public:
    explicit SingleCover(Cover cover) : cover_(std::move(cover)) {}

    std::string name() const override { return "single-cover"; }

    void check_domain(const Graph& g, const TokenAssignment& tokens) const override
    {
        if (!(g == cover_.base))
            throw ScriptError("single-cover: cover is not over the given graph");
        if (tokens.size() != cover_.fibers.size())
            throw ScriptError("single-cover: token assignment has the wrong length");
        for (std::size_t v = 0; v < tokens.size(); ++v)
            if (static_cast<int>(cover_.fibers[v].size()) > tokens[v])
                throw ScriptError("single-cover: fiber of vertex " + std::to_string(v + 1) + " exceeds its tokens");
    }

    std::optional<Cover> next_move(const DpGameState&, std::span<const DpTurn> history) const override
    {
        if (!history.empty())
            return std::nullopt;
        return cover_;
    }

private:
    Cover cover_;
};

}  // namespace

ListGameState initial_state(const ListGameState& state, std::span<const ListTurn> history)
{
    TokenAssignment tokens = state.tokens();
    for (const auto& turn : history)
        for (Vertex v : turn.reveal)
            ++tokens[v];
    return ListGameState(state.graph_ptr(), std::move(tokens));
}

nlohmann::json to_json(const ListCertificate& c) { return certificate_json(c); }
nlohmann::json to_json(const DpCertificate& c) { return certificate_json(c); }

ListReplay::ListReplay(const ListGameState& initial, std::span<const ListTurn> history)
    : state_(initial), history_(history)
{
}

bool ListReplay::play(std::vector<Vertex> reveal)
{
    if (next_ >= history_.size()) {
        pending_ = std::move(reveal);
        return false;
    }
    std::sort(reveal.begin(), reveal.end());
    const ListTurn& turn = history_[next_];
    if (reveal != turn.reveal)
        throw ScriptError("script is not a function of the history: replayed move differs from the recorded one");
    state_.reveal(std::move(reveal));
    state_.reply(turn.reply);
    ++next_;
    return true;
}

const std::vector<Vertex>& ListReplay::last_reply() const
{
    if (next_ == 0)
        throw Error("no move has been replayed yet");
    return history_[next_ - 1].reply;
}

std::unique_ptr<ListListerScript> reveal_all_script() { return std::make_unique<RevealAll>(); }

std::unique_ptr<ListListerScript> bad_assignment_endgame_script(const Graph& g, const ListAssignment& lists,
                                                                const TokenAssignment& tokens)
{
    if (static_cast<int>(lists.size()) != g.order())
        throw ScriptError("endgame: list assignment has the wrong length");
    auto script = std::make_unique<Endgame>(g, lists);
    script->check_domain(g, tokens);
    return script;
}

bool play_list_endgame(ListReplay& replay, const ListAssignment& lists)
{
    std::set<Color> colors;
    for (const auto& list : lists)
        colors.insert(list.begin(), list.end());
    for (Color c : colors) {
        const auto& s = replay.state();
        std::vector<Vertex> reveal;
        for (Vertex v = 0; v < static_cast<int>(lists.size()); ++v)
            if (!s.colored(v) && s.tokens(v) > 0 && std::find(lists[v].begin(), lists[v].end(), c) != lists[v].end())
                reveal.push_back(v);
        if (reveal.empty())
            continue;
        if (!replay.play(std::move(reveal)))
            return false;
    }
    return true;
}

std::unique_ptr<DpListerScript> single_cover_script(Cover cover) { return std::make_unique<SingleCover>(std::move(cover)); }

}  // namespace colorlab
