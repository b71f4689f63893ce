#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "colorlab/covers.hpp"
#include "colorlab/error.hpp"
#include "colorlab/graph.hpp"

namespace colorlab {

/// Raised when a move is not legal in the position it is applied to.
class IllegalMoveError : public Error {
public:
    using Error::Error;
};

/// One turn of the list-coloring game: Lister reveals a fresh color above
/// `reveal`, Painter colors the independent subset `reply` with it.
struct ListTurn {
    std::vector<Vertex> reveal;
    std::vector<Vertex> reply;

    bool operator==(const ListTurn&) const = default;
};

/// Position in the list-coloring game. Lister wins once an uncolored vertex
/// has no tokens left; Painter wins once every vertex is colored.
class ListGameState {
public:
    ListGameState(std::shared_ptr<const Graph> graph, TokenAssignment tokens);

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    const TokenAssignment& tokens() const { return tokens_; }
    int tokens(Vertex v) const { return tokens_[v]; }
    bool colored(Vertex v) const { return colored_[v]; }
    const std::vector<bool>& colored() const { return colored_; }
    std::span<const Vertex> pending_reveal() const { return pending_; }
    bool has_pending_reveal() const { return !pending_.empty(); }

    bool painter_won() const;
    /// Only meaningful between turns.
    bool lister_won() const;
    /// All tokens spent, or every vertex colored.
    bool is_over() const;

    /// Nonempty set of distinct, uncolored, token-positive vertices; deducts
    /// one token from each.
    void reveal(std::vector<Vertex> vertices);
    /// Independent subset of the pending reveal.
    void reply(const std::vector<Vertex>& vertices);

private:
    std::shared_ptr<const Graph> graph_;
    TokenAssignment tokens_;
    std::vector<bool> colored_;
    std::vector<Vertex> pending_;
};

/// Independent subsets of the pending reveal, each sorted, in increasing
/// order of their vertex bitmask (maximal ones only when `maximal_only`).
/// The reveal may hold at most 64 vertices.
std::vector<std::vector<Vertex>> legal_painter_replies(const ListGameState& state, bool maximal_only);

ListGameState apply_turn(const ListGameState& state, const ListTurn& turn);

/// One turn of the DP-coloring game: Lister reveals `cover` (fiber sizes are
/// the tokens spent), Painter picks an independent set of its colors.
struct DpTurn {
    Cover cover;
    std::vector<CoverColor> reply;
};

class DpGameState {
public:
    DpGameState(std::shared_ptr<const Graph> graph, TokenAssignment tokens);

    const Graph& graph() const { return *graph_; }
    const TokenAssignment& tokens() const { return tokens_; }
    int tokens(Vertex v) const { return tokens_[v]; }
    bool satisfied(Vertex v) const { return satisfied_[v]; }
    const std::vector<bool>& satisfied() const { return satisfied_; }
    const Cover* pending_cover() const { return pending_ ? &*pending_ : nullptr; }

    bool painter_won() const;
    bool lister_won() const;
    bool is_over() const;

    /// A valid cover of the base graph with |fiber(v)| <= tokens(v), not all
    /// fibers empty; deducts the fiber sizes.
    void reveal(Cover cover);
    /// Colors of the pending cover, at most one per fiber, pairwise non-adjacent.
    void reply(const std::vector<CoverColor>& colors);

private:
    std::shared_ptr<const Graph> graph_;
    TokenAssignment tokens_;
    std::vector<bool> satisfied_;
    std::optional<Cover> pending_;
};

/// Independent color sets of the pending cover, each sorted by color id.
std::vector<std::vector<CoverColor>> legal_painter_replies(const DpGameState& state, bool maximal_only);

DpGameState apply_turn(const DpGameState& state, const DpTurn& turn);

}  // namespace colorlab
