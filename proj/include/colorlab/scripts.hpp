#pragma once

#include <memory>

#include "colorlab/certify.hpp"
#include "colorlab/constructions.hpp"

namespace colorlab {

/// Lister on H(t,k): t turns revealing every uncolored U vertex, then the
/// bad K_{t,k^t} assignment on x(., j*) and the first k^t uncolored u(l, j*),
/// j* being the column with the most uncolored vertices (smallest on ties).
/// Accepts any token assignment on the gadget graph; the win is only
/// guaranteed from h+t-1.
std::unique_ptr<ListListerScript> h_lister_script(int t, int k);

/// Lister on G(t,k): turns (i, j) in row-major order reveal y_j and the U
/// vertices of every copy with i in coordinate j, then the copy indexed by
/// the turns on which Painter took each y_j gets the gadget strategy.
std::unique_ptr<ListListerScript> g_lister_script(int t, int k);

/// Strategy body of h_lister_script on the copy of the gadget starting at
/// `offset`. Returns false while suspended on a pending move.
bool play_gadget_strategy(ListReplay& replay, const GadgetLabeling& lab, const BadList& bad, Vertex offset);

}  // namespace colorlab
