#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "colorlab/choosability.hpp"
#include "colorlab/covers.hpp"
#include "colorlab/error.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace colorlab;
using helpers::constant;
using helpers::graph1;

namespace {

bool has_kind(const std::vector<CoverViolation>& vs, CoverViolation::Kind kind)
{
    return std::any_of(vs.begin(), vs.end(), [&](const CoverViolation& v) { return v.kind == kind; });
}

SlotMatching identity(int size)
{
    SlotMatching m;
    for (int s = 0; s < size; ++s)
        m.emplace_back(s, s);
    return m;
}

/// 2-cover of C_4 with identity matchings except a swap on the last edge.
Cover twisted_c4()
{
    auto c4 = cycle_graph(4);
    std::vector<SlotMatching> ms(4, identity(2));
    ms.back() = {{0, 1}, {1, 0}};
    return cover_from_slot_matchings(c4, constant(c4, 2), ms);
}

}  // namespace

TEST_CASE("validate cover")
{
    auto k2 = complete_graph(2);
    auto id = cover_from_slot_matchings(k2, {2, 2}, {identity(2)});
    CHECK(validate_cover(k2, {2, 2}, id).empty());

    auto bad = id;
    bad.cross_edges.emplace_back(0, 3);
    CHECK(has_kind(validate_cover(k2, {2, 2}, bad), CoverViolation::Kind::not_a_matching));

    auto big = cover_from_slot_matchings(k2, {3, 2}, {identity(2)});
    CHECK(validate_cover(big).empty());
    CHECK(has_kind(validate_cover(k2, {2, 2}, big), CoverViolation::Kind::fiber_size));

    auto stray = cover_from_slot_matchings(graph1(3, {{1, 2}}), {1, 1, 1}, {identity(1)});
    stray.cross_edges.emplace_back(1, 2);
    CHECK(has_kind(validate_cover(stray), CoverViolation::Kind::stray_edge));

    auto overlap = id;
    overlap.fibers[1][0] = 0;
    CHECK(has_kind(validate_cover(overlap), CoverViolation::Kind::fiber_overlap));
}

TEST_CASE("lists to cover")
{
    auto k2 = complete_graph(2);
    auto same = lists_to_cover(k2, {{0, 1}, {0, 1}});
    CHECK(validate_cover(k2, {2, 2}, same).empty());
    CHECK(same.cross_edges.size() == 2);
    CHECK(find_transversal(same).has_value());

    auto clash = lists_to_cover(k2, {{0}, {0}});
    CHECK(clash.cross_edges.size() == 1);
    CHECK_FALSE(find_transversal(clash).has_value());

    auto apart = lists_to_cover(k2, {{0}, {1}});
    CHECK(apart.cross_edges.empty());
    CHECK(find_transversal(apart).has_value());
}

TEST_CASE("find transversal")
{
    auto c4 = cycle_graph(4);
    auto id = cover_from_slot_matchings(c4, constant(c4, 2), std::vector<SlotMatching>(4, identity(2)));
    auto t = find_transversal(id);
    REQUIRE(t.has_value());
    CHECK(is_transversal(id, *t));

    auto twisted = twisted_c4();
    CHECK_FALSE(oracle::has_transversal(twisted));
    CHECK_FALSE(find_transversal(twisted).has_value());

    auto empty = cover_from_slot_matchings(graph1(2, {}), {0, 2}, {});
    CHECK_FALSE(find_transversal(empty).has_value());

    auto broken = id;
    broken.cross_edges.emplace_back(0, 3);
    CHECK_THROWS_AS(find_transversal(broken), InputError);
}

TEST_CASE("transversal search is invariant under renaming colors")
{
    std::mt19937 rng(3);
    for (int round = 0; round < 100; ++round) {
        auto g = oracle::random_graph(2 + round % 5, 0.6, rng);
        TokenAssignment f(g.order());
        for (int& x : f)
            x = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<SlotMatching> ms;
        for (auto [a, b] : g.edges()) {
            auto options = maximal_slot_matchings(f[a], f[b]);
            ms.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
        }
        auto h = cover_from_slot_matchings(g, f, ms);
        std::vector<CoverColor> perm(h.color_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Cover renamed = h;
        renamed.names.assign(h.color_count(), "");
        for (CoverColor c = 0; c < h.color_count(); ++c)
            renamed.names[perm[c]] = h.names[c];
        for (auto& fiber : renamed.fibers)
            for (auto& c : fiber)
                c = perm[c];
        for (auto& [a, b] : renamed.cross_edges) {
            a = perm[a];
            b = perm[b];
        }
        const bool expected = oracle::has_transversal(h);
        CHECK(find_transversal(h).has_value() == expected);
        CHECK(find_transversal(renamed).has_value() == expected);
    }
}

TEST_CASE("maximal slot matchings")
{
    CHECK(maximal_slot_matchings(2, 2).size() == 2);
    CHECK(maximal_slot_matchings(3, 3).size() == 6);
    CHECK(maximal_slot_matchings(2, 3).size() == 6);
    CHECK(maximal_slot_matchings(3, 1).size() == 3);
    CHECK(maximal_slot_matchings(0, 2).size() == 1);
    CHECK(maximal_slot_matchings(2, 2).front() == identity(2));
}

TEST_CASE("canonical cover enumeration")
{
    auto count = [](const Graph& g, const TokenAssignment& f) {
        return for_each_canonical_cover(g, f, [](const Cover&) { return true; });
    };
    CHECK(count(path_graph(4), {2, 3, 1, 2}) == 1);
    CHECK(count(complete_bipartite(1, 3), constant(complete_bipartite(1, 3), 3)) == 1);
    CHECK(count(cycle_graph(4), constant(cycle_graph(4), 2)) == 2);
    CHECK(count(complete_graph(3), constant(complete_graph(3), 2)) == 2);
    CHECK(count(complete_graph(3), constant(complete_graph(3), 3)) == 6);
    CHECK(count(complete_graph(4), constant(complete_graph(4), 2)) == 8);

    for_each_canonical_cover(complete_graph(4), constant(complete_graph(4), 3), [](const Cover& h) {
        CHECK(validate_cover(h.base, TokenAssignment(4, 3), h).empty());
        return true;
    });
}

TEST_CASE("gauge soundness against every cover")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : oracle::graph_classes(n, false)) {
            auto f = constant(g, 2);
            CHECK(is_dp_f_colorable(g, f).colorable == oracle::dp_colorable(g, f));
        }
    std::mt19937 rng(5);
    for (int round = 0; round < 40; ++round) {
        auto g = oracle::random_graph(2 + round % 2, 0.7, rng);
        TokenAssignment f(g.order());
        for (int& x : f)
            x = std::uniform_int_distribution<int>(1, 3)(rng);
        CHECK(is_dp_f_colorable(g, f).colorable == oracle::dp_colorable(g, f));
    }
}

TEST_CASE("dp colorability")
{
    auto c4 = cycle_graph(4);
    auto r = is_dp_f_colorable(c4, constant(c4, 2));
    CHECK_FALSE(r.colorable);
    REQUIRE(r.witness.has_value());
    CHECK(validate_cover(c4, constant(c4, 2), *r.witness).empty());
    CHECK_FALSE(oracle::has_transversal(*r.witness));

    CHECK(is_dp_f_colorable(path_graph(3), constant(path_graph(3), 2)).colorable);
    CHECK(is_dp_f_colorable(complete_graph(3), constant(complete_graph(3), 3)).colorable);
    CHECK_FALSE(is_dp_f_colorable(complete_graph(3), constant(complete_graph(3), 2)).colorable);

    CHECK(dp_chromatic_number(c4, 4) == 3);
    CHECK(dp_chromatic_number(complete_graph(4), 5) == 4);
    CHECK(dp_chromatic_number(complete_graph(1), 1) == 1);
    CHECK_FALSE(dp_chromatic_number(complete_graph(4), 3).has_value());
}

TEST_CASE("list coloring reduces to transversals")
{
    std::mt19937 rng(17);
    int colorable = 0;
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + round % 6;
        auto g = oracle::random_graph(n, 0.5, rng);
        ListAssignment lists(n);
        for (auto& list : lists) {
            const int size = std::uniform_int_distribution<int>(1, 3)(rng);
            std::vector<Color> universe{0, 1, 2, 3};
            std::shuffle(universe.begin(), universe.end(), rng);
            list.assign(universe.begin(), universe.begin() + size);
        }
        const bool expected = oracle::list_colorable(g, lists);
        colorable += expected;
        CHECK(find_list_coloring(g, lists).has_value() == expected);
        CHECK(find_transversal(lists_to_cover(g, lists)).has_value() == expected);
    }
    CHECK(colorable > 0);
    CHECK(colorable < 200);
}

TEST_CASE("cover json")
{
    auto h = twisted_c4();
    auto back = cover_from_json(cover_to_json(h));
    CHECK(back.base == h.base);
    CHECK(back.names == h.names);
    CHECK(back.fibers == h.fibers);
    CHECK(validate_cover(back).empty());
    CHECK_FALSE(find_transversal(back).has_value());

    CHECK_THROWS_AS(cover_from_json(nlohmann::json::parse(R"({"graph": {"n": 2, "edges": [[1,2]]},
        "fibers": {"1": ["a"], "2": ["b"]}, "cross_edges": [["a", "zz"]]})")),
                    InputError);
}

TEST_CASE("restrict cover")
{
    auto h = twisted_c4();
    auto sub = restrict_cover(h, {1, 2}, [](CoverColor c) { return c != 2; });
    CHECK(sub.cover.base == complete_graph(2));
    CHECK(sub.cover.fibers[0].size() == 1);
    CHECK(sub.cover.fibers[1].size() == 2);
    CHECK(validate_cover(sub.cover).empty());
    for (std::size_t c = 0; c < sub.original.size(); ++c)
        CHECK(sub.cover.names[c] == h.names[sub.original[c]]);
}
