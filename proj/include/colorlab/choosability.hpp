#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colorlab/graph.hpp"
#include "colorlab/verdict.hpp"

namespace colorlab {

/// Proper coloring with phi(v) in L(v), or nullopt when none exists.
std::optional<std::vector<Color>> find_list_coloring(const Graph& g, const ListAssignment& lists);

struct ChoosabilityOptions {
    /// Color universe size; 0 means sum of f(v), which already suffices.
    int universe = 0;
    /// Maximum number of list assignments examined.
    std::uint64_t max_assignments = 500'000'000;
};

struct ChoosabilityResult {
    Verdict verdict = Verdict::yes;
    std::optional<ListAssignment> witness;
    std::uint64_t assignments = 0;
};

/// Exhausts list assignments with |L(v)| = f(v) up to color renaming:
/// vertices are filled in id order and a list may only introduce the
/// smallest colors not used so far.
ChoosabilityResult is_f_choosable(const Graph& g, const TokenAssignment& f, const ChoosabilityOptions& options = {});

struct ParameterResult {
    /// Least qualifying k, or nullopt when every k <= cap fails.
    std::optional<int> value;
    bool budget_exceeded = false;
};

ParameterResult list_chromatic_number(const Graph& g, int cap, const ChoosabilityOptions& options = {});

}  // namespace colorlab
