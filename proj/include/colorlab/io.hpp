#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "colorlab/graph.hpp"

namespace colorlab {

/// Reads `p <n> <m>` followed by `e <u> <v>` lines (1-indexed). Lines
/// starting with `#` and blank lines are ignored. Throws InputError.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

/// Inline graph JSON: {"n": N, "edges": [[u, v], ...]} with 1-indexed endpoints.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// {"tokens": {"1": 2, ...}}; every vertex of `g` must be present.
TokenAssignment tokens_from_json(const Graph& g, const nlohmann::json& j);
nlohmann::json tokens_to_json(const TokenAssignment& f);

/// Lists with named colors. Internal color ids are assigned in order of
/// first appearance; `names[c]` recovers the original string.
struct NamedLists {
    ListAssignment lists;
    std::vector<std::string> names;
};

/// {"lists": {"1": ["a", "b"], ...}}; every vertex of `g` must be present.
NamedLists lists_from_json(const Graph& g, const nlohmann::json& j);
nlohmann::json lists_to_json(const ListAssignment& lists, const std::vector<std::string>& names = {});

/// Spreadsheet-style color names: 0 -> "a", 25 -> "z", 26 -> "aa".
std::string color_name(Color c);

}  // namespace colorlab
