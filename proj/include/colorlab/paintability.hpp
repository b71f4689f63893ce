#pragma once

#include <cstdint>
#include <optional>

#include "colorlab/graph.hpp"
#include "colorlab/verdict.hpp"

namespace colorlab {

struct GameSolveOptions {
    /// Painter only considers maximal independent replies.
    bool maximal_replies = true;
    /// An unfinished vertex with more tokens than unfinished neighbors is
    /// settled in Painter's favour (the game on G is won iff it is won on G - v).
    bool prune_low_degree = true;
    /// Budget on distinct positions evaluated.
    std::uint64_t max_nodes = 100'000'000;
};

struct GameSolveResult {
    Verdict verdict = Verdict::yes;
    std::uint64_t nodes = 0;
};

/// Full minimax for the list-coloring game, memoized on (colored set,
/// remaining tokens). Graphs up to 64 vertices.
GameSolveResult is_f_paintable(const Graph& g, const TokenAssignment& f, const GameSolveOptions& options = {});

/// Full minimax for the DP-coloring game. A Lister move is a vector of fiber
/// sizes over unfinished vertices plus a cover from the canonical family
/// for those sizes (identity on a spanning forest of the support, maximal
/// matchings elsewhere).
GameSolveResult is_dp_f_paintable(const Graph& g, const TokenAssignment& f, const GameSolveOptions& options = {});

struct GameParameterResult {
    std::optional<int> value;
    bool budget_exceeded = false;
    std::uint64_t nodes = 0;
};

GameParameterResult paint_number(const Graph& g, int cap, const GameSolveOptions& options = {});
GameParameterResult dp_paint_number(const Graph& g, int cap, const GameSolveOptions& options = {});

}  // namespace colorlab
