#include "colorlab/games.hpp"

#include <algorithm>
#include <string>

#include "independent_sets.hpp"

namespace colorlab {

namespace {

std::string vname(Vertex v) { return std::to_string(v + 1); }

void check_tokens(const Graph& g, const TokenAssignment& tokens)
{
    if (static_cast<int>(tokens.size()) != g.order())
        throw InputError("token assignment does not cover the graph");
    for (int t : tokens)
        if (t < 0)
            throw InputError("negative token count");
}

bool any_uncovered_without_tokens(const std::vector<bool>& done, const TokenAssignment& tokens)
{
    for (std::size_t v = 0; v < done.size(); ++v)
        if (!done[v] && tokens[v] == 0)
            return true;
    return false;
}

}  // namespace

ListGameState::ListGameState(std::shared_ptr<const Graph> graph, TokenAssignment tokens)
    : graph_(std::move(graph)), tokens_(std::move(tokens))
{
    check_tokens(*graph_, tokens_);
    colored_.assign(tokens_.size(), false);
}

bool ListGameState::painter_won() const
{
    return std::all_of(colored_.begin(), colored_.end(), [](bool c) { return c; });
}

bool ListGameState::lister_won() const
{
    return pending_.empty() && any_uncovered_without_tokens(colored_, tokens_);
}

bool ListGameState::is_over() const
{
    return painter_won() || std::all_of(tokens_.begin(), tokens_.end(), [](int t) { return t == 0; });
}

void ListGameState::reveal(std::vector<Vertex> vertices)
{
    if (!pending_.empty())
        throw IllegalMoveError("a reveal is already pending");
    if (vertices.empty())
        throw IllegalMoveError("empty reveal");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw IllegalMoveError("reveal lists a vertex twice");
    for (Vertex v : vertices) {
        if (v < 0 || v >= graph_->order())
            throw IllegalMoveError("reveal names an unknown vertex");
        if (colored_[v])
            throw IllegalMoveError("reveal includes colored vertex " + vname(v));
        if (tokens_[v] == 0)
            throw IllegalMoveError("reveal includes vertex " + vname(v) + " without tokens");
    }
    for (Vertex v : vertices)
        --tokens_[v];
    pending_ = std::move(vertices);
}

void ListGameState::reply(const std::vector<Vertex>& vertices)
{
    if (pending_.empty())
        throw IllegalMoveError("no pending reveal");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (!std::binary_search(pending_.begin(), pending_.end(), v))
            throw IllegalMoveError("reply includes unrevealed vertex " + vname(v));
        for (std::size_t j = 0; j < i; ++j) {
            if (vertices[j] == v)
                throw IllegalMoveError("reply lists a vertex twice");
            if (graph_->adjacent(vertices[j], v))
                throw IllegalMoveError("reply is not independent: " + vname(vertices[j]) + " " + vname(v));
        }
    }
    for (Vertex v : vertices)
        colored_[v] = true;
    pending_.clear();
}

std::vector<std::vector<Vertex>> legal_painter_replies(const ListGameState& state, bool maximal_only)
{
    auto reveal = state.pending_reveal();
    if (reveal.empty())
        throw IllegalMoveError("no pending reveal");
    if (reveal.size() > 64)
        throw Error("reply enumeration supports at most 64 revealed vertices");
    const int r = static_cast<int>(reveal.size());
    std::vector<detail::Mask> adj(reveal.size(), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (state.graph().adjacent(reveal[i], reveal[j]))
                adj[i] |= detail::bit(j);
    const detail::Mask all = r == 64 ? ~detail::Mask{0} : detail::bit(r) - 1;
    std::vector<detail::Mask> masks;
    auto collect = [&](detail::Mask m) { masks.push_back(m); };
    if (maximal_only)
        detail::maximal_independent_subsets(all, adj, collect);
    else
        detail::independent_subsets(all, adj, collect);
    std::sort(masks.begin(), masks.end());
    std::vector<std::vector<Vertex>> out;
    out.reserve(masks.size());
    for (auto m : masks) {
        std::vector<Vertex> set;
        for (; m != 0; m &= m - 1)
            set.push_back(reveal[std::countr_zero(m)]);
        out.push_back(std::move(set));
    }
    return out;
}

ListGameState apply_turn(const ListGameState& state, const ListTurn& turn)
{
    ListGameState next = state;
    next.reveal(turn.reveal);
    next.reply(turn.reply);
    return next;
}

DpGameState::DpGameState(std::shared_ptr<const Graph> graph, TokenAssignment tokens)
    : graph_(std::move(graph)), tokens_(std::move(tokens))
{
    check_tokens(*graph_, tokens_);
    satisfied_.assign(tokens_.size(), false);
}

bool DpGameState::painter_won() const
{
    return std::all_of(satisfied_.begin(), satisfied_.end(), [](bool c) { return c; });
}

bool DpGameState::lister_won() const
{
    return !pending_ && any_uncovered_without_tokens(satisfied_, tokens_);
}

bool DpGameState::is_over() const
{
    return painter_won() || std::all_of(tokens_.begin(), tokens_.end(), [](int t) { return t == 0; });
}

void DpGameState::reveal(Cover cover)
{
    if (pending_)
        throw IllegalMoveError("a cover is already pending");
    if (!(cover.base == *graph_))
        throw IllegalMoveError("cover base differs from the game graph");
    auto violations = validate_cover(cover);
    if (!violations.empty())
        throw IllegalMoveError("invalid cover: " + violations.front().message);
    bool any = false;
    for (Vertex v = 0; v < graph_->order(); ++v) {
        int m = static_cast<int>(cover.fibers[v].size());
        if (m > tokens_[v])
            throw IllegalMoveError("fiber above vertex " + vname(v) + " exceeds its tokens");
        any = any || m > 0;
    }
    if (!any)
        throw IllegalMoveError("empty reveal");
    for (Vertex v = 0; v < graph_->order(); ++v)
        tokens_[v] -= static_cast<int>(cover.fibers[v].size());
    pending_ = std::move(cover);
}

void DpGameState::reply(const std::vector<CoverColor>& colors)
{
    if (!pending_)
        throw IllegalMoveError("no pending cover");
    CoverIndex index(*pending_);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        CoverColor c = colors[i];
        if (c < 0 || c >= pending_->color_count() || index.owner[c] < 0)
            throw IllegalMoveError("reply names an unknown color");
        for (std::size_t j = 0; j < i; ++j) {
            if (index.owner[colors[j]] == index.owner[c])
                throw IllegalMoveError("reply picks two colors above vertex " + vname(index.owner[c]));
            if (index.conflicting(colors[j], c))
                throw IllegalMoveError("reply is not independent");
        }
    }
    for (CoverColor c : colors)
        satisfied_[index.owner[c]] = true;
    pending_.reset();
}

std::vector<std::vector<CoverColor>> legal_painter_replies(const DpGameState& state, bool maximal_only)
{
    const Cover* cover = state.pending_cover();
    if (cover == nullptr)
        throw IllegalMoveError("no pending cover");
    CoverIndex index(*cover);
    std::vector<Vertex> support;
    for (Vertex v = 0; v < static_cast<Vertex>(cover->fibers.size()); ++v)
        if (!cover->fibers[v].empty())
            support.push_back(v);

    std::vector<int> blocked(static_cast<std::size_t>(cover->color_count()), 0);
    std::vector<CoverColor> chosen;
    std::vector<std::vector<CoverColor>> out;
    auto is_maximal = [&] {
        std::vector<bool> has(cover->fibers.size(), false);
        for (CoverColor c : chosen)
            has[index.owner[c]] = true;
        for (Vertex v : support)
            if (!has[v])
                for (CoverColor c : cover->fibers[v])
                    if (blocked[c] == 0)
                        return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == support.size()) {
            if (!maximal_only || is_maximal()) {
                auto set = chosen;
                std::sort(set.begin(), set.end());
                out.push_back(std::move(set));
            }
            return;
        }
        for (CoverColor c : cover->fibers[support[i]]) {
            if (blocked[c] != 0)
                continue;
            chosen.push_back(c);
            for (CoverColor d : index.conflicts[c])
                ++blocked[d];
            self(self, i + 1);
            for (CoverColor d : index.conflicts[c])
                --blocked[d];
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return out;
}

DpGameState apply_turn(const DpGameState& state, const DpTurn& turn)
{
    DpGameState next = state;
    next.reveal(turn.cover);
    next.reply(turn.reply);
    return next;
}

}  // namespace colorlab
