#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "colorlab/graph.hpp"

namespace colorlab {

/// Dense cover color id, 0..color_count()-1.
using CoverColor = int;

/// A cover of `base`: one fiber (a clique of colors) per base vertex and,
/// for each base edge, a matching between the two fibers.
struct Cover {
    Graph base;
    std::vector<std::vector<CoverColor>> fibers;
    std::vector<std::pair<CoverColor, CoverColor>> cross_edges;
    /// Opaque display name per color id; its size defines the id range.
    std::vector<std::string> names;

    int color_count() const { return static_cast<int>(names.size()); }
};

/// Chosen color per base vertex.
using Transversal = std::vector<CoverColor>;

struct CoverViolation {
    enum class Kind { vertex_count, unknown_color, fiber_overlap, fiber_size, stray_edge, not_a_matching };
    Kind kind;
    std::string message;
};

/// Structural checks only: ids in range, disjoint fibers, cross edges joining
/// fibers of adjacent base vertices, matchings.
std::vector<CoverViolation> validate_cover(const Cover& h);
/// Structural checks plus |fiber(v)| == f(v).
std::vector<CoverViolation> validate_cover(const Graph& g, const TokenAssignment& f, const Cover& h);

/// Owner vertex and sorted conflict list for every color of a cover.
struct CoverIndex {
    explicit CoverIndex(const Cover& h);

    std::vector<Vertex> owner;
    std::vector<std::vector<CoverColor>> conflicts;

    bool conflicting(CoverColor a, CoverColor b) const;
};

bool is_transversal(const Cover& h, const Transversal& chosen);

/// Depth-first search over vertices in decreasing base degree with forward
/// checking. Throws InputError on a structurally invalid cover.
std::optional<Transversal> find_transversal(const Cover& h);

/// Fibers get fresh ids named "v:color"; each edge gets one cross edge per
/// shared original color.
Cover lists_to_cover(const Graph& g, const ListAssignment& lists, const std::vector<std::string>& color_names = {});

/// The cover with fibers of size f(v) (ids laid out vertex by vertex, named
/// "v.s") and the given slot matchings, one per base edge in `g.edges()` order.
/// Each matching lists (slot of lower vertex, slot of higher vertex) pairs.
using SlotMatching = std::vector<std::pair<int, int>>;
Cover cover_from_slot_matchings(const Graph& g, const TokenAssignment& f, const std::vector<SlotMatching>& matchings);

/// All maximal matchings between fibers of sizes a and b, as slot pairs,
/// in lexicographic order of the injection from the smaller side.
std::vector<SlotMatching> maximal_slot_matchings(int a, int b);

/// Canonical family: identity matchings on a spanning forest, every maximal
/// matching on the remaining edges (first non-tree edge most significant).
/// The callback returns false to stop. Returns the number of covers yielded.
std::uint64_t for_each_canonical_cover(const Graph& g, const TokenAssignment& f,
                                       const std::function<bool(const Cover&)>& visit);

struct DpColorability {
    bool colorable = false;
    std::optional<Cover> witness;
    std::uint64_t covers_checked = 0;
};

/// Witness covers are re-checked with find_transversal before return.
DpColorability is_dp_f_colorable(const Graph& g, const TokenAssignment& f);

/// Least k <= cap for which g is DP-k-colorable, or nullopt.
std::optional<int> dp_chromatic_number(const Graph& g, int cap);

/// The part of `h` over `vertices` (relabeled in order), keeping only colors
/// for which `keep` is true. `original[c]` maps new ids back to ids of `h`.
struct SubCover {
    Cover cover;
    std::vector<CoverColor> original;
};
SubCover restrict_cover(const Cover& h, const std::vector<Vertex>& vertices,
                        const std::function<bool(CoverColor)>& keep);

/// {"graph": {...}, "fibers": {"v": ["id", ...]}, "cross_edges": [["id1", "id2"], ...]}
nlohmann::json cover_to_json(const Cover& h);
/// Ids are opaque strings; internal ids follow their order of appearance in
/// the fibers (vertices in increasing order). Throws InputError.
Cover cover_from_json(const nlohmann::json& j);

nlohmann::json transversal_to_json(const Cover& h, const Transversal& chosen);

}  // namespace colorlab
