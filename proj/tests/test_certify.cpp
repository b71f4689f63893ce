#include <doctest.h>

#include <random>

#include "colorlab/certify.hpp"
#include "colorlab/error.hpp"
#include "colorlab/paintability.hpp"
#include "colorlab/scripts.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace colorlab;
using helpers::constant;

namespace {

TokenAssignment list_sizes(const ListAssignment& lists)
{
    TokenAssignment out;
    for (const auto& l : lists)
        out.push_back(static_cast<int>(l.size()));
    return out;
}

ListCertificate certify_endgame(const Graph& g, const ListAssignment& lists, const CertifyOptions& options = {})
{
    auto tokens = list_sizes(lists);
    auto script = bad_assignment_endgame_script(g, lists, tokens);
    return certify_lister_strategy(g, tokens, *script, options);
}

/// Replays a Painter line from the start; Lister must not have won at its end.
bool line_survives(const Graph& g, const TokenAssignment& tokens, const std::vector<ListTurn>& line)
{
    ListGameState s(std::make_shared<const Graph>(g), tokens);
    for (const auto& turn : line)
        s = apply_turn(s, turn);
    return !s.lister_won();
}

class RevealColored : public ListListerScript {
public:
    std::string name() const override { return "broken"; }
    void check_domain(const Graph&, const TokenAssignment&) const override {}
    std::optional<std::vector<Vertex>> next_move(const ListGameState&, std::span<const ListTurn> history) const override
    {
        if (history.empty())
            return std::vector<Vertex>{0};
        return history.front().reveal;
    }
};

}  // namespace

TEST_CASE("endgame script")
{
    auto star = complete_bipartite(1, 2);
    auto r = certify_endgame(star, {{0, 1}, {0}, {1}});
    CHECK(r.verdict == CertificateVerdict::lister_wins);

    auto k2 = complete_graph(2);
    CertifyOptions traced;
    traced.record_trace = true;
    auto clash = certify_endgame(k2, {{0}, {0}}, traced);
    CHECK(clash.verdict == CertificateVerdict::lister_wins);
    REQUIRE(clash.trace.has_value());
    CHECK((*clash.trace)["reveal"] == nlohmann::json::array({1, 2}));
    CHECK((*clash.trace)["replies"].size() == 2);
    for (const auto& branch : (*clash.trace)["replies"])
        CHECK(branch["then"] == "LISTER_WINS");

    auto fine = certify_endgame(k2, {{0}, {1}});
    CHECK(fine.verdict == CertificateVerdict::painter_survives);
    CHECK(fine.counterexample.size() == 2);
    CHECK(line_survives(k2, {1, 1}, fine.counterexample));
    auto j = to_json(fine);
    CHECK(j["verdict"] == "PAINTER_SURVIVES");
    CHECK(j["counterexample"].size() == 2);
    CHECK(to_json(clash)["counterexample"].is_null());

    CHECK_THROWS_AS(bad_assignment_endgame_script(k2, {{0, 1}, {0}}, {1, 1}), ScriptError);
}

TEST_CASE("endgame script wins from every uncolorable assignment")
{
    std::mt19937 rng(41);
    int found = 0;
    while (found < 50) {
        auto g = oracle::random_graph(2 + found % 4, 0.8, rng);
        ListAssignment lists(g.order());
        for (auto& list : lists)
            for (Color c = 0; c < 3; ++c)
                if (std::bernoulli_distribution(0.4)(rng))
                    list.push_back(c);
        bool any_empty = false;
        for (const auto& list : lists)
            any_empty |= list.empty();
        if (any_empty || oracle::list_colorable(g, lists))
            continue;
        ++found;
        CHECK(certify_endgame(g, lists).verdict == CertificateVerdict::lister_wins);
    }
}

TEST_CASE("gadget script")
{
    auto h12 = gadget_H(1, 2);
    auto script = h_lister_script(1, 2);
    auto r = certify_lister_strategy(h12.graph, constant(h12.graph, 2), *script);
    CHECK(r.verdict == CertificateVerdict::lister_wins);

    auto h13 = gadget_H(1, 3);
    TokenAssignment tokens = h13.labeling.h;
    for (Vertex x : h13.labeling.X)
        CHECK(tokens[x] == 3);
    auto r13 = certify_lister_strategy(h13.graph, tokens, *h_lister_script(1, 3));
    CHECK(r13.verdict == CertificateVerdict::lister_wins);

    auto extra = certify_lister_strategy(h12.graph, constant(h12.graph, 3), *script);
    CHECK(extra.verdict == CertificateVerdict::painter_survives);
    CHECK(line_survives(h12.graph, constant(h12.graph, 3), extra.counterexample));

    CHECK_THROWS_AS(certify_lister_strategy(h13.graph, tokens, *script), ScriptError);
}

TEST_CASE("composite script degenerates to the gadget")
{
    auto g12 = graph_G(1, 2);
    CHECK(g12.graph == gadget_H(1, 2).graph);
    auto r = certify_lister_strategy(g12.graph, constant(g12.graph, 2), *g_lister_script(1, 2));
    CHECK(r.verdict == CertificateVerdict::lister_wins);
    auto same = certify_lister_strategy(g12.graph, constant(g12.graph, 2), *h_lister_script(1, 2));
    CHECK(to_json(r) == to_json(same));
}

TEST_CASE("scripts cannot beat a paintable position")
{
    auto c4 = cycle_graph(4);
    auto f = constant(c4, 2);
    CHECK(certify_lister_strategy(c4, f, *reveal_all_script()).verdict == CertificateVerdict::painter_survives);
    for (const auto& lists : std::vector<ListAssignment>{{{0, 1}, {0, 1}, {0, 1}, {0, 1}},
                                                         {{0, 1}, {0, 2}, {1, 2}, {0, 2}},
                                                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}) {
        auto r = certify_endgame(c4, lists);
        CHECK(r.verdict == CertificateVerdict::painter_survives);
        CHECK(line_survives(c4, f, r.counterexample));
    }
}

TEST_CASE("certified wins agree with the minimax solver")
{
    std::mt19937 rng(43);
    int wins = 0;
    for (int round = 0; round < 120; ++round) {
        auto g = oracle::random_graph(2 + round % 4, 0.7, rng);
        ListAssignment lists(g.order());
        for (auto& list : lists) {
            for (Color c = 0; c < 3; ++c)
                if (std::bernoulli_distribution(0.5)(rng))
                    list.push_back(c);
            if (list.empty())
                list.push_back(0);
        }
        auto tokens = list_sizes(lists);
        auto r = certify_endgame(g, lists);
        if (r.verdict == CertificateVerdict::lister_wins) {
            ++wins;
            CHECK(is_f_paintable(g, tokens).verdict == Verdict::no);
        } else {
            CHECK(line_survives(g, tokens, r.counterexample));
        }
        auto all = certify_lister_strategy(g, tokens, *reveal_all_script());
        if (all.verdict == CertificateVerdict::lister_wins)
            CHECK(is_f_paintable(g, tokens).verdict == Verdict::no);
    }
    CHECK(wins > 0);
}

TEST_CASE("illegal script moves are reported")
{
    auto k2 = complete_graph(2);
    RevealColored broken;
    CHECK_THROWS_AS(certify_lister_strategy(k2, {2, 2}, broken), ScriptError);
}

TEST_CASE("dp certification")
{
    auto c4 = cycle_graph(4);
    auto twisted = is_dp_f_colorable(c4, constant(c4, 2)).witness;
    REQUIRE(twisted.has_value());
    auto r = certify_lister_strategy(c4, constant(c4, 2), *single_cover_script(*twisted));
    CHECK(r.verdict == CertificateVerdict::lister_wins);

    std::vector<SlotMatching> id(4, SlotMatching{{0, 0}, {1, 1}});
    auto plain = cover_from_slot_matchings(c4, constant(c4, 2), id);
    auto s = certify_lister_strategy(c4, constant(c4, 2), *single_cover_script(plain));
    CHECK(s.verdict == CertificateVerdict::painter_survives);
    REQUIRE(s.counterexample.size() == 1);
    CHECK(is_transversal(plain, s.counterexample.front().reply));
    CHECK(to_json(s)["counterexample"][0]["reply"].size() == 4);

    CHECK_THROWS_AS(certify_lister_strategy(c4, constant(c4, 1), *single_cover_script(plain)), ScriptError);
}

TEST_CASE("certificates are independent of thread count")
{
    auto h13 = gadget_H(1, 3);
    auto script = h_lister_script(1, 3);
    CertifyOptions one;
    one.record_trace = true;
    CertifyOptions four = one;
    four.threads = 4;
    auto a = to_json(certify_lister_strategy(h13.graph, h13.labeling.h, *script, one)).dump();
    auto b = to_json(certify_lister_strategy(h13.graph, h13.labeling.h, *script, four)).dump();
    CHECK(a == b);

    auto h12 = gadget_H(1, 2);
    CertifyOptions off = one;
    off.record_trace = false;
    CertifyOptions off4 = off;
    off4.threads = 4;
    auto c = to_json(certify_lister_strategy(h12.graph, constant(h12.graph, 3), *h_lister_script(1, 2), off)).dump();
    auto d = to_json(certify_lister_strategy(h12.graph, constant(h12.graph, 3), *h_lister_script(1, 2), off4)).dump();
    CHECK(c == d);
}

TEST_CASE("certification budget")
{
    auto h13 = gadget_H(1, 3);
    CertifyOptions tiny;
    tiny.max_nodes = 10;
    auto r = certify_lister_strategy(h13.graph, h13.labeling.h, *h_lister_script(1, 3), tiny);
    CHECK(r.verdict == CertificateVerdict::budget_exceeded);
    tiny.threads = 3;
    auto again = certify_lister_strategy(h13.graph, h13.labeling.h, *h_lister_script(1, 3), tiny);
    CHECK(to_json(r) == to_json(again));
}
