#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "colorlab/constructions.hpp"
#include "colorlab/covers.hpp"
#include "colorlab/error.hpp"

namespace colorlab {

/// X vertices colored so far, in processing order, with S_c for each chosen
/// color: the sorted clique indices l whose fiber at u(l, j) holds a color
/// adjacent to c.
struct GreedyState {
    std::vector<std::pair<Vertex, CoverColor>> colored;
    std::vector<std::vector<int>> index_sets;
};

/// Every color of x broke the bound against some already colored subset.
struct GreedyFailure {
    Vertex x = -1;
    struct Rejection {
        CoverColor color;
        /// Colored X vertices whose chosen sets, together with S_color,
        /// intersect in too many indices. Empty means S_color alone.
        std::vector<Vertex> subset;
        int intersection = 0;
    };
    std::vector<Rejection> rejected;
};

/// |intersection|^(t+1) < k^(t(t+1-q)) for every q sets of the family,
/// 1 <= q <= t+1.
bool satisfies_star(const std::vector<std::vector<int>>& family, int t, const BigInt& k);

/// Colors X in order j, then i. For each x the first fiber color meeting the
/// bound against every colored subset of size at most t is taken.
/// Throws InputError when the cover is invalid, not over the gadget, or has a
/// fiber smaller than h.
std::variant<GreedyState, GreedyFailure> greedy_color_X(const Cover& h, const Gadget& gadget);

/// Raised when some clique has more blocked colors than it can absorb.
class CliqueCompletionError : public Error {
public:
    CliqueCompletionError(const std::string& what, int clique) : Error(what), clique_(clique) {}
    /// 0-based clique index.
    int clique() const { return clique_; }

private:
    int clique_;
};

/// Extends the X coloring to every clique: vertices with fewer available
/// colors go first, each takes its first color clear of the clique's
/// earlier picks. The result is checked with is_transversal.
Transversal complete_cliques(const Cover& h, const Gadget& gadget, const GreedyState& state);

struct DpColorFailure {
    int copy = -1;
    /// Vertex of the composite graph.
    Vertex vertex = -1;
    GreedyFailure greedy;
};

/// y_j take their first fiber color; each copy is then colored greedily on
/// the colors that survive. Throws InputError on an invalid cover or a fiber
/// size other than k-t+1.
std::variant<Transversal, DpColorFailure> dp_color_G(const Cover& cover, const Composite& g);

nlohmann::json to_json(const Cover& h, const GreedyFailure& failure);

}  // namespace colorlab
