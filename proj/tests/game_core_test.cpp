#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "parity/bipartite.hpp"
#include "parity/brute_force.hpp"
#include "parity/core.hpp"
#include "parity/generate.hpp"
#include "parity/io.hpp"
#include "test_util.hpp"

using namespace parity;
using parity::testing::edge_set;
using parity::testing::nine_node_game;

TEST(Par, FollowsPriorityParity) {
    EXPECT_EQ(par(2), Player::Even);
    EXPECT_EQ(par(1), Player::Odd);
    EXPECT_EQ(par(0), Player::Even);
    for (std::uint64_t p = 0; p < 40; ++p) {
        EXPECT_EQ(par(p), par(p % 2)) << p;
    }
}

TEST(Par, PlayerEmbedding) {
    EXPECT_EQ(embed(Player::Even) * embed(Player::Odd), -1);
    EXPECT_EQ(opponent(Player::Even), Player::Odd);
    EXPECT_EQ(opponent(Player::Odd), Player::Even);
}

TEST(Transpose, TwoCycleIsSelfTranspose) {
    const ParityGame g = ParityGame::from_lists({{1}, {0}}, {Player::Even, Player::Odd}, {0, 1});
    const Transposed t = transpose(g);
    EXPECT_EQ(std::vector<std::int32_t>(t.predecessors(0).begin(), t.predecessors(0).end()),
              std::vector<std::int32_t>{1});
    EXPECT_EQ(std::vector<std::int32_t>(t.predecessors(1).begin(), t.predecessors(1).end()),
              std::vector<std::int32_t>{0});
}

TEST(Transpose, SingleEdgeReversal) {
    const ParityGame g =
        ParityGame::from_lists({{1}, {1}}, {Player::Even, Player::Even}, {0, 0});
    const Transposed t = transpose(g);
    EXPECT_TRUE(t.predecessors(0).empty());
    EXPECT_EQ(t.predecessors(1).size(), 2u);
}

TEST(Transpose, Involution) {
    GenConfig cfg;
    cfg.node_count = 60;
    cfg.degree = DegreeSpec::constant(3);
    cfg.seed = 17;
    const ParityGame g = generate(cfg);

    // Rebuild a game from the predecessor lists and transpose again.
    const Transposed t = transpose(g);
    std::vector<std::vector<std::int32_t>> pred_lists(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
        pred_lists[v].assign(t.predecessors(v).begin(), t.predecessors(v).end());
    }
    const ParityGame reversed = ParityGame::from_lists(pred_lists, g.owner, g.prio);
    const Transposed back = transpose(reversed);
    std::vector<std::vector<std::int32_t>> back_lists(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
        back_lists[v].assign(back.predecessors(v).begin(), back.predecessors(v).end());
    }
    const ParityGame round = ParityGame::from_lists(back_lists, g.owner, g.prio);
    EXPECT_EQ(edge_set(round), edge_set(g));
}

TEST(Validate, FlagsSinkNode) {
    const ParityGame g = ParityGame::from_lists({{1}, {}}, {Player::Even, Player::Odd}, {0, 1});
    const auto v = validate(g);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->node, 1);
    EXPECT_EQ(v->message, "sink node");
}

TEST(Validate, FlagsOutOfRangeSuccessor) {
    const ParityGame g = ParityGame::from_lists({{2}, {0}}, {Player::Even, Player::Odd}, {0, 1});
    const auto v = validate(g);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->node, 0);
    EXPECT_EQ(v->message, "successor id out of range");
}

TEST(Validate, FlagsDuplicateSuccessor) {
    const ParityGame g =
        ParityGame::from_lists({{1, 1}, {0}}, {Player::Even, Player::Odd}, {0, 1});
    const auto v = validate(g);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->message, "duplicate successor");
}

TEST(Validate, AcceptsGeneratorOutput) {
    GenConfig cfg;
    cfg.node_count = 200;
    cfg.degree = DegreeSpec::constant(4);
    cfg.seed = 5;
    EXPECT_FALSE(validate(generate(cfg)).has_value());
    EXPECT_FALSE(validate(nine_node_game()).has_value());
}

TEST(PgSolverFormat, WritesExactBytes) {
    const std::string expected =
        "parity 8;\n"
        "0 1 1 2,4;\n"
        "1 0 1 3,5;\n"
        "2 1 1 4,8;\n"
        "3 3 1 2,6;\n"
        "4 2 0 5,8;\n"
        "5 0 0 0,6;\n"
        "6 2 0 4;\n"
        "7 1 0 5,8;\n"
        "8 1 1 3;\n";
    EXPECT_EQ(write_pgsolver(nine_node_game()), expected);
}

TEST(PgSolverFormat, RoundTripsGeneratedGames) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenConfig cfg;
        cfg.node_count = 40 + static_cast<int>(seed);
        cfg.degree = DegreeSpec::constant(1 + static_cast<int>(seed % 5));
        cfg.priority_count = 2 + 2 * static_cast<int>(seed % 3);
        cfg.seed = seed;
        const ParityGame g = generate(cfg);
        const ParityGame back = parse_pgsolver(write_pgsolver(g));
        EXPECT_EQ(back, g) << "seed " << seed;
    }
}

TEST(PgSolverFormat, ParserAcceptsNamesAndLooseWhitespace) {
    const std::string text =
        "parity   2 ;\n"
        "  2 7 1 0 \"loop back\" ;\n"
        "0   3 0   1 , 2;\n\n"
        "1 0 1 0;";
    const ParityGame g = parse_pgsolver(text);
    EXPECT_EQ(g.node_count(), 3);
    EXPECT_EQ(g.prio[2], 7);
    EXPECT_EQ(g.owner[2], Player::Odd);
    EXPECT_EQ(g.out_degree(0), 2);
    EXPECT_EQ(g.owner[0], Player::Even);
}

TEST(PgSolverFormat, ParserRejectsMalformedInput) {
    EXPECT_THROW(parse_pgsolver("parity 1;\n0 0 0 1;\n0 0 0 1;\n1 0 0 0;\n"), std::runtime_error)
        << "duplicate record";
    EXPECT_THROW(parse_pgsolver("parity 1;\n0 0 0 1;\n"), std::runtime_error) << "missing node";
    EXPECT_THROW(parse_pgsolver("parity 0;\n0 0 2 0;\n"), std::runtime_error) << "bad owner";
    EXPECT_THROW(parse_pgsolver("0 0 0 0;\n"), std::runtime_error) << "missing header";
    EXPECT_THROW(parse_pgsolver("parity 0;\n0 0 0;\n"), std::runtime_error) << "no successors";
}

TEST(SolutionFormat, RoundTrip) {
    PartialSolution s(3);
    s.value = {-1, 0, +1};
    s.witness = {kNoWitness, kNoWitness, 0};
    const std::string text = write_solution(s);
    EXPECT_EQ(text, "0 0\n1 ?\n2 1 0\n");
    const PartialSolution back = parse_solution(text);
    EXPECT_EQ(back.value, s.value);
    EXPECT_EQ(back.witness, s.witness);
}

TEST(Bipartite, NoSameOwnerEdgesMeansIdentity) {
    const ParityGame g = ParityGame::from_lists({{1}, {0}}, {Player::Even, Player::Odd}, {0, 1});
    EXPECT_EQ(to_bipartite(g), g);
}

TEST(Bipartite, InsertsOneNodePerSameOwnerEdge) {
    // Odd-owned 2-cycle: both edges are same-owner, so two Even middlemen
    // appear and both original nodes keep winner Odd (max priority 3).
    const ParityGame g = ParityGame::from_lists({{1}, {0}}, {Player::Odd, Player::Odd}, {1, 3});
    const ParityGame b = to_bipartite(g);
    EXPECT_EQ(b.node_count(), 4);
    EXPECT_EQ(b.edge_count(), 4);
    EXPECT_EQ(b.owner[2], Player::Even);
    EXPECT_EQ(b.owner[3], Player::Even);
    EXPECT_EQ(b.prio[2], 0);
    EXPECT_EQ(b.prio[3], 0);

    const Solution orig = brute_force_solve(g);
    const Solution conv = brute_force_solve(b);
    EXPECT_EQ(orig.winner[0], Player::Odd);
    EXPECT_EQ(conv.winner[0], Player::Odd);
    EXPECT_EQ(conv.winner[1], Player::Odd);
}

TEST(Bipartite, CountsAndBipartitenessOnRandomGames) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenConfig cfg;
        cfg.node_count = 50;
        cfg.degree = DegreeSpec::constant(3);
        cfg.priority_count = 4;
        cfg.seed = 100 + seed;
        const ParityGame g = generate(cfg);

        int same_owner_edges = 0;
        for (int v = 0; v < g.node_count(); ++v) {
            for (std::int32_t w : g.successors(v)) same_owner_edges += (g.owner[v] == g.owner[w]);
        }
        const ParityGame b = to_bipartite(g);
        EXPECT_EQ(b.node_count(), g.node_count() + same_owner_edges);
        EXPECT_EQ(b.edge_count(), g.edge_count() + same_owner_edges);
        EXPECT_FALSE(validate(b).has_value());
        for (int v = 0; v < b.node_count(); ++v) {
            for (std::int32_t w : b.successors(v)) {
                EXPECT_NE(b.owner[v], b.owner[w]) << "same-owner edge survived";
            }
        }
    }
}
