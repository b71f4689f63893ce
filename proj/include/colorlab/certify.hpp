#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "colorlab/games.hpp"

namespace colorlab {

/// A deterministic Lister strategy for the list-coloring game: a pure
/// function from the game history to the next reveal.
class ListListerScript {
public:
    virtual ~ListListerScript() = default;

    virtual std::string name() const = 0;
    /// Throws ScriptError when (g, tokens) is outside the script's domain.
    virtual void check_domain(const Graph& g, const TokenAssignment& tokens) const = 0;
    /// The reveal for the position reached by `history` from the initial
    /// tokens, or nullopt when the script has nothing more to play.
    virtual std::optional<std::vector<Vertex>> next_move(const ListGameState& state,
                                                        std::span<const ListTurn> history) const = 0;
};

/// Same for the DP-coloring game; a move is a cover of the base graph.
class DpListerScript {
public:
    virtual ~DpListerScript() = default;

    virtual std::string name() const = 0;
    virtual void check_domain(const Graph& g, const TokenAssignment& tokens) const = 0;
    virtual std::optional<Cover> next_move(const DpGameState& state, std::span<const DpTurn> history) const = 0;
};

enum class CertificateVerdict { lister_wins, painter_survives, budget_exceeded };

std::string_view to_string(CertificateVerdict v);

template <class Turn>
struct BasicCertificate {
    CertificateVerdict verdict = CertificateVerdict::lister_wins;
    /// Positions visited.
    std::uint64_t nodes = 0;
    /// On painter_survives: a complete line of play Painter survives.
    std::vector<Turn> counterexample;
    /// Nested turns, recorded only on request.
    std::optional<nlohmann::json> trace;
};

using ListCertificate = BasicCertificate<ListTurn>;
using DpCertificate = BasicCertificate<DpTurn>;

struct CertifyOptions {
    std::uint64_t max_nodes = 100'000'000;
    bool maximal_replies = true;
    int threads = 1;
    bool record_trace = false;
};

/// Plays `script` against every (maximal) Painter reply. Positions where an
/// unfinished vertex has no tokens are Lister wins; positions where Painter
/// has finished, or where the script stops, are Painter survivals. Throws
/// ScriptError if the script is out of domain or plays an illegal move.
/// The result does not depend on `threads`.
ListCertificate certify_lister_strategy(const Graph& g, const TokenAssignment& tokens, const ListListerScript& script,
                                        const CertifyOptions& options = {});
DpCertificate certify_lister_strategy(const Graph& g, const TokenAssignment& tokens, const DpListerScript& script,
                                      const CertifyOptions& options = {});

nlohmann::json to_json(const ListTurn& turn);
nlohmann::json to_json(const DpTurn& turn);
nlohmann::json to_json(const ListCertificate& c);
nlohmann::json to_json(const DpCertificate& c);

/// The starting position of a play: tokens restored by the reveals in
/// `history`, nothing colored.
ListGameState initial_state(const ListGameState& state, std::span<const ListTurn> history);

/// Re-runs the script along a list of turns from the initial position,
/// feeding it the recorded replies. Strategy bodies call play() for each
/// move; it returns false once the recorded history is used up, leaving the
/// move pending.
class ListReplay {
public:
    ListReplay(const ListGameState& initial, std::span<const ListTurn> history);

    bool play(std::vector<Vertex> reveal);
    const ListGameState& state() const { return state_; }
    /// Reply recorded for the most recent replayed move.
    const std::vector<Vertex>& last_reply() const;
    std::optional<std::vector<Vertex>> take_pending() { return std::move(pending_); }

private:
    ListGameState state_;
    std::span<const ListTurn> history_;
    std::size_t next_ = 0;
    std::optional<std::vector<Vertex>> pending_;
};

/// Reveals every unfinished token-positive vertex each turn.
std::unique_ptr<ListListerScript> reveal_all_script();

/// Walks the distinct colors of the lists in increasing order; each turn
/// reveals the current color above every uncolored vertex whose list holds
/// it. Vertices with empty lists take no part. Requires |L(v)| = tokens(v)
/// for every vertex with a nonempty list (throws ScriptError otherwise).
std::unique_ptr<ListListerScript> bad_assignment_endgame_script(const Graph& g, const ListAssignment& lists,
                                                                const TokenAssignment& tokens);

/// Strategy body shared with the gadget scripts: same moves as the endgame
/// script, without the token precondition. Returns false while suspended.
bool play_list_endgame(ListReplay& replay, const ListAssignment& lists);

/// Plays `cover` once and stops.
std::unique_ptr<DpListerScript> single_cover_script(Cover cover);

}  // namespace colorlab
