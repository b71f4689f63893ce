#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace colorlab::detail {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

/// Calls `out(mask)` for every independent subset of `within` (adjacency
/// given as bitmasks over the same index space).
template <class Out>
void independent_subsets(Mask within, std::span<const Mask> adj, Out&& out)
{
    auto rec = [&](auto&& self, Mask chosen, Mask candidates) -> void {
        if (candidates == 0) {
            out(chosen);
            return;
        }
        int v = std::countr_zero(candidates);
        self(self, chosen | bit(v), candidates & ~adj[v] & ~bit(v));
        self(self, chosen, candidates & ~bit(v));
    };
    rec(rec, 0, within);
}

/// Calls `out(mask)` for every maximal independent subset of `within`
/// (Bron-Kerbosch with pivoting on the complement graph).
template <class Out>
void maximal_independent_subsets(Mask within, std::span<const Mask> adj, Out&& out)
{
    auto compatible = [&](int v) { return within & ~adj[v] & ~bit(v); };
    auto rec = [&](auto&& self, Mask chosen, Mask p, Mask x) -> void {
        if ((p | x) == 0) {
            out(chosen);
            return;
        }
        int pivot = -1, best = -1;
        for (Mask m = p | x; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            int score = std::popcount(p & compatible(u));
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        for (Mask m = p & ~compatible(pivot); m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            if ((p & bit(v)) == 0)
                continue;
            self(self, chosen | bit(v), p & compatible(v), x & compatible(v));
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    rec(rec, 0, within, 0);
}

}  // namespace colorlab::detail
